#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "gcq/compiler.hpp"
#include "gcq/labels.hpp"
#include "gcq/pulses.hpp"

using namespace gcq;

namespace {

// Test-local saturating power; keeps the oracles independent.
uint64_t opow(uint64_t base, unsigned exp)
{
    uint64_t v = 1;
    for (unsigned i = 0; i < exp; i++) {
        if (v > (uint64_t{1} << 40))
            return uint64_t{1} << 40;
        v *= base;
    }
    return v;
}

// Counting oracle: how many levels j have i congruent to 1 mod L^j.
uint32_t hierarchy_oracle(unsigned i, unsigned p, unsigned L)
{
    uint32_t count = 0;
    for (unsigned j = 1; j < p; j++)
        if (i % opow(L, j) == 1)
            count++;
    return count;
}

// Recursive construction of the super-CU activation sets: runs of three at
// scale L^(k-1) starting at offsets {0,5,10}*L^(k-1).
bool supercu_run_oracle(uint64_t x, unsigned k, unsigned L)
{
    uint64_t scale = opow(L, k - 1);
    std::set<uint64_t> members;
    for (uint64_t r : {0, 5, 10})
        for (uint64_t off = 1 + r * scale; off <= (r + 3) * scale; off++)
            members.insert(off);
    return members.count(x) > 0;
}

uint32_t supercu_oracle_label(unsigned i, unsigned p, unsigned L)
{
    uint32_t sum = 0;
    for (unsigned j = 1; j < p; j++) {
        if (i > opow(L, j))
            continue;
        bool prod = true;
        for (unsigned k = 1; k < j && prod; k++)
            prod = supercu_run_oracle(i % opow(L, k), k, L);
        if (prod)
            sum++;
    }
    return p - sum;
}

} // namespace

TEST_CASE("hierarchy labels match the counting oracle")
{
    for (unsigned p : {2u, 3u, 4u}) {
        for (unsigned L : {2u, 4u, 16u}) {
            unsigned num_ss = static_cast<unsigned>(std::min<uint64_t>(opow(L, p - 1), 4096));
            label_plan plan = hierarchy_labels(p, L, num_ss);
            for (unsigned i = 1; i <= num_ss; i++) {
                CAPTURE(p);
                CAPTURE(L);
                CAPTURE(i);
                uint32_t want = i == 1 ? p : hierarchy_oracle(i, p, L);
                CHECK(plan.label(i) == want);
            }
        }
    }
}

TEST_CASE("worked hierarchy examples")
{
    label_plan plan = hierarchy_labels(3, 4, 256);
    CHECK(plan.label(5) == 1);  // R(5 mod 4 = 1) + R(5 mod 16 = 5) = 1
    CHECK(plan.label(1) == 3);  // would be p-1 = 2; reserved as p
    CHECK(plan.label(17) == 2); // 17 = 1 mod 4 and mod 16

    // p = 1: empty sum everywhere, one reserved station
    label_plan flat = hierarchy_labels(1, 8, 64);
    CHECK(flat.label(1) == 1);
    for (unsigned i = 2; i <= 64; i++)
        CHECK(flat.label(i) == 0);
}

TEST_CASE("exactly one station carries the reserved value")
{
    for (unsigned p : {1u, 2u, 3u, 4u}) {
        label_plan plan = hierarchy_labels(p, 4, 300);
        unsigned reserved = 0;
        for (unsigned i = 1; i <= plan.num_ss; i++) {
            if (plan.label(i) == p)
                reserved++;
            else
                CHECK(plan.label(i) <= p - 1);
        }
        CHECK(reserved == 1);
    }
}

TEST_CASE("activation predicate against the congruence oracle")
{
    label_plan plan = hierarchy_labels(3, 4, 256);

    // b = 0: every station active
    for (unsigned i = 1; i <= 256; i++)
        CHECK(plan.active_at_level(i, 0));

    // b = 2: exactly the stations congruent to 1 mod 16 (this includes the
    // reserved station at i = 1)
    for (unsigned i = 1; i <= 256; i++)
        CHECK(plan.active_at_level(i, 2) == (i % 16 == 1));

    // b = p: only the reserved station survives
    for (unsigned i = 1; i <= 256; i++)
        CHECK(plan.active_at_level(i, 3) == (i == 1));
}

TEST_CASE("comparator program equals the threshold predicate exhaustively")
{
    comparator_program prog = make_comparator(8);
    for (uint32_t label = 0; label <= 8; label++)
        for (uint32_t b = 0; b <= 8; b++)
            CHECK(evaluate(prog, label, b) == (label >= b ? 1 : 0));

    CHECK_THROWS_AS(evaluate(prog, 3, 9), std::out_of_range);
    CHECK_THROWS_AS(evaluate(prog, 99, 1), std::out_of_range);
}

TEST_CASE("comparator stays logarithmic and uses two ancillas")
{
    comparator_program p8 = make_comparator(8);
    comparator_program p64 = make_comparator(64);
    CHECK(p8.step_count() <= p64.step_count());
    CHECK(static_cast<double>(p8.step_count()) <= 6.0 * std::log2(8));
    CHECK(static_cast<double>(p64.step_count()) <= 6.0 * std::log2(64));

    // p = 1 gives a constant program
    CHECK(make_comparator(1).step_count() == 5);

    // the step alphabet only touches the two ancillas c1/c2 plus a_x and r
    for (const auto& step : p64.steps)
        CHECK((step.op == comparator_op::diff_and || step.op == comparator_op::set_r_if_a ||
               step.op == comparator_op::clear_decided ||
               step.op == comparator_op::erase_scratch || step.op == comparator_op::final_eq));
}

TEST_CASE("super-CU level-one offsets for the 16-station block")
{
    label_plan plan = supercu_labels(3, 16);
    std::vector<unsigned> active;
    for (unsigned i = 1; i <= 16; i++)
        if (plan.active_at_level(i, 1))
            active.push_back(i);
    CHECK(active == std::vector<unsigned>{1, 2, 3, 6, 7, 8, 11, 12, 13});

    // 3 on, 2 off, 3 on, 2 off, 3 on
    std::vector<int> runs;
    int run = 0;
    bool value = plan.active_at_level(1, 1);
    for (unsigned i = 1; i <= 16; i++) {
        bool a = plan.active_at_level(i, 1);
        if (a == value) {
            run++;
        } else {
            runs.push_back(run);
            value = a;
            run = 1;
        }
    }
    runs.push_back(run);
    CHECK(runs == std::vector<int>{3, 2, 3, 2, 3, 3});
}

TEST_CASE("super-CU formula matches the recursive pattern oracle")
{
    for (auto [p, num_ss] : {std::pair<unsigned, unsigned>{2, 16}, {3, 256}, {3, 512}}) {
        label_plan plan = supercu_labels(p, num_ss);
        for (unsigned i = 1; i <= num_ss; i++) {
            CAPTURE(p);
            CAPTURE(i);
            CHECK(plan.label(i) == supercu_oracle_label(i, p, 16));
        }
    }
}

TEST_CASE("activation grows with the level for super-CU plans")
{
    label_plan plan = supercu_labels(3, 256);
    for (unsigned b = 0; b + 1 <= 2; b++)
        for (unsigned i = 1; i <= 256; i++)
            if (plan.active_at_level(i, b))
                CHECK(plan.active_at_level(i, b + 1));
}

TEST_CASE("hierarchy activation shrinks with the level")
{
    label_plan plan = hierarchy_labels(4, 4, 256);
    for (unsigned b = 0; b < 4; b++)
        for (unsigned i = 1; i <= 256; i++)
            if (plan.active_at_level(i, b + 1))
                CHECK(plan.active_at_level(i, b));
}

TEST_CASE("composite labels answer for either half")
{
    label_plan h = hierarchy_labels(3, 16, 256);
    label_plan s = supercu_labels(3, 256);
    label_plan both = composite_labels(h, s);

    for (unsigned i = 1; i <= 256; i++) {
        for (unsigned b = 0; b <= 2; b++) {
            CHECK(both.active_at_level(i, b, 0) == h.active_at_level(i, b));
            CHECK(both.active_at_level(i, b, 1) == s.active_at_level(i, b));
        }
    }
    CHECK(both.total_label_bits() == h.total_label_bits() + s.total_label_bits());

    label_plan small = hierarchy_labels(3, 16, 64);
    CHECK_THROWS_AS(composite_labels(h, small), std::invalid_argument);
    CHECK_THROWS_AS(both.active_at_level(1, 0), std::invalid_argument);
}

TEST_CASE("explicit per-level labels round-trip arbitrary patterns")
{
    std::mt19937_64 rng(8);
    unsigned p = 5, num_ss = 200;
    std::vector<std::vector<uint8_t>> patterns(p, std::vector<uint8_t>(num_ss));
    for (auto& level : patterns)
        for (auto& bit : level)
            bit = rng() & 1;

    label_plan plan = explicit_per_level_labels(p, patterns);
    CHECK(plan.label_bits == p);
    for (unsigned level = 0; level < p; level++)
        for (unsigned i = 1; i <= num_ss; i++)
            CHECK(plan.active_at_level(i, level) == (patterns[level][i - 1] != 0));

    // p = 1 stores a single bit per station
    label_plan one = explicit_per_level_labels(1, {std::vector<uint8_t>(4, 1)});
    CHECK(one.label_bits == 1);

    patterns[2].pop_back();
    CHECK_THROWS_AS(explicit_per_level_labels(p, patterns), std::invalid_argument);
}

TEST_CASE("explicit encoding of the hierarchy pattern matches the formula plan")
{
    unsigned p = 3, L = 4, num_ss = 128;
    label_plan h = hierarchy_labels(p, L, num_ss);
    std::vector<std::vector<uint8_t>> patterns(p, std::vector<uint8_t>(num_ss));
    for (unsigned level = 0; level < p; level++)
        for (unsigned i = 1; i <= num_ss; i++)
            patterns[level][i - 1] = h.active_at_level(i, level) ? 1 : 0;
    label_plan e = explicit_per_level_labels(p, patterns);
    for (unsigned level = 0; level < p; level++)
        for (unsigned i = 1; i <= num_ss; i++)
            CHECK(e.active_at_level(i, level) == h.active_at_level(i, level));
}

TEST_CASE("label computation stays far below the serial-gate alternative")
{
    // The comparator runs on every station simultaneously, so its pulse cost
    // is set by p alone; a serial pass with one CU scales with the device.
    cost_model model;
    for (unsigned p : {2u, 3u, 4u}) {
        int steps = static_cast<int>(make_comparator(p).step_count());
        int64_t label_cost =
            instruction_cost(pulse_instruction::make_label_compute(0, steps), model);
        for (int blocks : {64, 1024, 4096}) {
            chain_layout layout(10, blocks, 8, 10);
            int64_t serial = serialized_ec_pulses(code_spec::steane(), layout, model);
            CHECK(label_cost * 10 < serial);
        }
        // and the step count itself never depends on the device size
        CHECK(make_comparator(p).step_count() == static_cast<size_t>(steps));
    }
}

TEST_CASE("cell encodings never contain a lone one")
{
    for (unsigned p : {1u, 3u, 8u}) {
        label_plan plan = hierarchy_labels(p, 4, 64);
        for (unsigned i = 1; i <= plan.num_ss; i++) {
            auto cells = label_cell_pattern(plan.label(i), plan.label_bits);
            for (size_t k = 0; k < cells.size(); k++) {
                if (cells[k] != 1)
                    continue;
                bool left = k > 0 && cells[k - 1] == 1;
                bool right = k + 1 < cells.size() && cells[k + 1] == 1;
                CHECK((left || right));
            }
        }
    }
    CHECK_THROWS_AS(label_cell_pattern(9, 3), std::invalid_argument);
}
