#include "gcq/labels.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

namespace gcq {

namespace {

constexpr uint64_t k_pow_cap = uint64_t{1} << 62;

// L^e, saturating at k_pow_cap (station indices are far below the cap, so a
// saturated power behaves exactly like the true value in mod/compare).
uint64_t pow_sat(uint64_t base, unsigned exp)
{
    uint64_t v = 1;
    while (exp-- > 0) {
        if (v >= k_pow_cap / base)
            return k_pow_cap;
        v *= base;
    }
    return v;
}

unsigned bits_for(unsigned p)
{
    return std::max(1u, static_cast<unsigned>(std::bit_width(p)));
}

} // namespace

uint32_t label_plan::label(unsigned ss_index) const
{
    if (ss_index < 1 || ss_index > num_ss)
        throw std::out_of_range("label_plan: station index out of range (1-indexed)");
    return labels[ss_index - 1];
}

bool label_plan::active_at_level(unsigned ss_index, unsigned b) const
{
    switch (kind) {
    case plan_kind::hierarchy:
        if (b > p)
            throw std::out_of_range("active_at_level: level out of range");
        return gcq::active_at_level(label(ss_index), b);
    case plan_kind::supercu:
        // Stored values descend with the activation sum, so rising levels
        // only switch stations on.
        if (b > p)
            throw std::out_of_range("active_at_level: level out of range");
        return label(ss_index) <= b;
    case plan_kind::explicit_bits:
        if (b >= p)
            throw std::out_of_range("active_at_level: level out of range");
        return (label(ss_index) >> b) & 1;
    case plan_kind::composite:
        throw std::invalid_argument("active_at_level: composite plans need a half selector");
    }
    throw std::invalid_argument("active_at_level: bad plan");
}

bool label_plan::active_at_level(unsigned ss_index, unsigned b, int half) const
{
    if (kind != plan_kind::composite)
        return active_at_level(ss_index, b);
    const auto& sub = half == 0 ? half_a : half_b;
    return sub->active_at_level(ss_index, b);
}

unsigned label_plan::total_label_bits() const
{
    if (kind == plan_kind::composite)
        return half_a->total_label_bits() + half_b->total_label_bits();
    return label_bits;
}

label_plan hierarchy_labels(unsigned p, unsigned L, unsigned num_ss)
{
    if (p < 1 || L < 2 || num_ss < 1)
        throw std::invalid_argument("hierarchy_labels: need p >= 1, L >= 2, num_ss >= 1");
    label_plan plan;
    plan.kind = plan_kind::hierarchy;
    plan.p = p;
    plan.L = L;
    plan.num_ss = num_ss;
    plan.label_bits = bits_for(p);
    plan.labels.resize(num_ss, 0);
    for (unsigned i = 1; i <= num_ss; i++) {
        uint32_t label = 0;
        for (unsigned j = 1; j < p; j++)
            if (i % pow_sat(L, j) == 1)
                label++;
        plan.labels[i - 1] = label;
    }
    // Station 1 alone satisfies every congruence; it trades its p-1 for the
    // reserved single-CU value p.
    plan.labels[0] = p;
    return plan;
}

bool active_at_level(uint32_t label, unsigned b)
{
    return label >= b;
}

namespace {

// R'(x, k): the three 3-wide runs at scale L^(k-1).
bool supercu_run(uint64_t x, unsigned k, unsigned L)
{
    uint64_t scale = pow_sat(L, k - 1);
    for (uint64_t r : {uint64_t{0}, uint64_t{5}, uint64_t{10}})
        if (1 + r * scale <= x && x <= (r + 3) * scale)
            return true;
    return false;
}

} // namespace

label_plan supercu_labels(unsigned p, unsigned num_ss, unsigned L)
{
    if (p < 2 || L < 2 || num_ss < 1)
        throw std::invalid_argument("supercu_labels: need p >= 2, L >= 2, num_ss >= 1");
    label_plan plan;
    plan.kind = plan_kind::supercu;
    plan.p = p;
    plan.L = L;
    plan.num_ss = num_ss;
    plan.label_bits = bits_for(p);
    plan.labels.resize(num_ss, 0);
    for (unsigned i = 1; i <= num_ss; i++) {
        uint32_t sum = 0;
        for (unsigned j = 1; j < p; j++) {
            if (i > pow_sat(L, j))
                continue;
            bool prod = true;
            for (unsigned k = 1; k < j && prod; k++)
                prod = supercu_run(i % pow_sat(L, k), k, L);
            if (prod)
                sum++;
        }
        plan.labels[i - 1] = p - sum;
    }
    return plan;
}

label_plan composite_labels(const label_plan& a, const label_plan& b)
{
    if (a.num_ss != b.num_ss)
        throw std::invalid_argument("composite_labels: station counts differ");
    label_plan plan;
    plan.kind = plan_kind::composite;
    plan.p = std::max(a.p, b.p);
    plan.L = a.L;
    plan.num_ss = a.num_ss;
    plan.label_bits = a.total_label_bits() + b.total_label_bits();
    plan.half_a = std::make_shared<label_plan>(a);
    plan.half_b = std::make_shared<label_plan>(b);
    plan.labels.resize(plan.num_ss, 0);
    for (unsigned i = 0; i < plan.num_ss; i++)
        plan.labels[i] = (a.labels[i] << b.total_label_bits()) | b.labels[i];
    return plan;
}

label_plan explicit_per_level_labels(unsigned p,
                                     const std::vector<std::vector<uint8_t>>& patterns)
{
    if (p < 1 || patterns.size() != p)
        throw std::invalid_argument("explicit_per_level_labels: need one pattern per level");
    size_t num_ss = patterns.front().size();
    for (const auto& pat : patterns)
        if (pat.size() != num_ss || num_ss == 0)
            throw std::invalid_argument("explicit_per_level_labels: pattern length mismatch");
    if (p > 31)
        throw std::invalid_argument("explicit_per_level_labels: too many levels for one word");

    label_plan plan;
    plan.kind = plan_kind::explicit_bits;
    plan.p = p;
    plan.L = 2;
    plan.num_ss = static_cast<unsigned>(num_ss);
    plan.label_bits = p;
    plan.labels.resize(num_ss, 0);
    for (unsigned level = 0; level < p; level++)
        for (size_t i = 0; i < num_ss; i++)
            if (patterns[level][i])
                plan.labels[i] |= 1u << level;
    return plan;
}

comparator_program make_comparator(unsigned p)
{
    if (p < 1)
        throw std::invalid_argument("make_comparator: p must be >= 1");
    comparator_program prog;
    prog.p = p;
    prog.bits = bits_for(p);
    // MSB-first sweep: c1 carries "undecided so far", c2 marks the first
    // differing bit, and the scratch bit is erased before the next round.
    for (unsigned x = 1; x <= prog.bits; x++) {
        prog.steps.push_back({comparator_op::diff_and, x});
        prog.steps.push_back({comparator_op::set_r_if_a, x});
        prog.steps.push_back({comparator_op::clear_decided, x});
        prog.steps.push_back({comparator_op::erase_scratch, x});
    }
    prog.steps.push_back({comparator_op::final_eq, 0});
    return prog;
}

int evaluate(const comparator_program& prog, uint32_t label, uint32_t b)
{
    if (b > prog.p)
        throw std::out_of_range("comparator: b out of range");
    if (label >> prog.bits)
        throw std::out_of_range("comparator: label does not fit the label bits");

    int c1 = 1, c2 = 0, r = 0;
    for (const auto& step : prog.steps) {
        switch (step.op) {
        case comparator_op::diff_and: {
            int a_x = (label >> (prog.bits - step.bit)) & 1;
            int b_x = (b >> (prog.bits - step.bit)) & 1;
            c2 = c1 & (a_x ^ b_x);
            break;
        }
        case comparator_op::set_r_if_a: {
            int a_x = (label >> (prog.bits - step.bit)) & 1;
            r |= c2 & a_x;
            break;
        }
        case comparator_op::clear_decided:
            c1 &= ~c2;
            break;
        case comparator_op::erase_scratch:
            c2 = 0;
            break;
        case comparator_op::final_eq:
            r |= c1;
            break;
        }
    }
    return r;
}

std::vector<uint8_t> label_cell_pattern(uint32_t label, unsigned bits)
{
    if (bits == 0 || (bits < 32 && (label >> bits) != 0))
        throw std::invalid_argument("label_cell_pattern: label does not fit");
    std::vector<uint8_t> cells{1, 1};
    for (unsigned x = bits; x-- > 0;) {
        uint8_t bit = (label >> x) & 1;
        cells.push_back(bit);
        cells.push_back(bit);
    }
    cells.push_back(1);
    cells.push_back(1);
    return cells;
}

} // namespace gcq
