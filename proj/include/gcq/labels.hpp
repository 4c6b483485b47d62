// Switching-station label machinery for concatenated control-unit patterns:
// hierarchy labels (one CU per L^b stations), super-CU labels (dense
// 3-on/2-off patterns per concatenation level), composite and explicit
// per-level plans, and the bitwise comparator program each station runs.
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace gcq {

enum class plan_kind : uint8_t { hierarchy, supercu, explicit_bits, composite };

struct label_plan {
    plan_kind kind = plan_kind::hierarchy;
    unsigned p = 1;      // levels parameter; p-1 = concatenation levels
    unsigned L = 2;      // block size in switching-station units
    unsigned num_ss = 1;
    std::vector<uint32_t> labels; // labels[i-1] for station i (1-indexed)
    unsigned label_bits = 1;

    // composite plans keep the two underlying plans
    std::shared_ptr<const label_plan> half_a;
    std::shared_ptr<const label_plan> half_b;

    uint32_t label(unsigned ss_index) const; // 1-indexed

    // Station activity when the device is commanded to level b. Hierarchy
    // plans activate stations whose label >= b; super-CU plans activate as
    // levels rise (stored value <= b); explicit plans read bit b directly.
    bool active_at_level(unsigned ss_index, unsigned b) const;
    // composite plans only: pick which half the query runs on (0 or 1).
    bool active_at_level(unsigned ss_index, unsigned b, int half) const;

    unsigned total_label_bits() const; // per-station bit budget
};

// label_i = sum_{j=1}^{p-1} R(i mod L^j) with R(x) = [x == 1]; station 1
// (the unique station that would hold p-1 for every device size) stores the
// reserved value p instead, so commanding level p leaves a single CU.
label_plan hierarchy_labels(unsigned p, unsigned L, unsigned num_ss);

// The plain activation predicate a station evaluates on its label.
bool active_at_level(uint32_t label, unsigned b);

// label_i = p - sum_{j=1}^{p-1} [i <= L^j] * prod_{k=1}^{j-1} R'(i mod L^k, k)
// where R'(x,k) = 1 on the three runs 1+r*L^(k-1) <= x <= (r+3)*L^(k-1),
// r in {0,5,10}; the empty product (j=1) is 1. Stored values descend so that
// raising the level only activates stations.
label_plan supercu_labels(unsigned p, unsigned num_ss, unsigned L = 16);

// Glue two plans into one larger label per station; queries address a half.
label_plan composite_labels(const label_plan& a, const label_plan& b);

// One activation bit per level per station: patterns[level][station-1].
label_plan explicit_per_level_labels(unsigned p,
                                     const std::vector<std::vector<uint8_t>>& patterns);

// ---------------------------------------------------------------------------
// Comparator program: fixed straight-line bit operations over the label bits
// a_x (MSB first), two ancilla bits c1/c2 (c2 erased every round), and the
// result bit r. Computes r = [label >= b] in O(log2 p) steps for any b.

enum class comparator_op : uint8_t {
    diff_and,      // c2 = c1 AND (a_x XOR b_x)
    set_r_if_a,    // r |= c2 AND a_x
    clear_decided, // c1 = c1 AND NOT c2
    erase_scratch, // c2 = 0 (qubit erasure)
    final_eq,      // r |= c1   (all bits equal => label == b => active)
};

struct comparator_step {
    comparator_op op;
    unsigned bit = 0; // 1-based, MSB first
};

struct comparator_program {
    unsigned p = 1;
    unsigned bits = 1;
    std::vector<comparator_step> steps;

    size_t step_count() const { return steps.size(); }
};

comparator_program make_comparator(unsigned p);
int evaluate(const comparator_program& prog, uint32_t label, uint32_t b);

// ---------------------------------------------------------------------------
// Physical cell encoding of a label: every bit is written as a 00/11 pair
// between 11 guard pairs, so the pattern contains no lone 1 and the Zeno
// reset pulse cannot touch it.
std::vector<uint8_t> label_cell_pattern(uint32_t label, unsigned bits);

} // namespace gcq
