#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "gcq/compiler.hpp"

using namespace gcq;

namespace {

const cost_model k_model;

std::string program_text(const pulse_program& p)
{
    std::ostringstream os;
    p.write_text(os);
    return os.str();
}

circuit random_circuit(unsigned wires, size_t len, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    circuit c(wires, 0);
    for (size_t k = 0; k < len; k++) {
        unsigned a = rng() % wires;
        unsigned b = (a + 1 + rng() % (wires - 1)) % wires;
        switch (rng() % 4) {
        case 0: c.add(gate::h(a)); break;
        case 1: c.add(gate::x(a)); break;
        case 2: c.add(gate::cnot(a, b)); break;
        default: c.add(gate::cz(a, b)); break;
        }
    }
    return c;
}

} // namespace

TEST_CASE("a single-qubit gate with the CU already adjacent costs 15 pulses")
{
    circuit c(10, 0);
    c.add(gate::h(4));
    compile_result r = compile(c, chain_layout(10), k_model, 4);
    CHECK(r.total_pulses == 15);
    CHECK(r.program.instructions.size() == 2);
}

TEST_CASE("controlled gate, control first wire, target fourth wire: 43 pulses")
{
    circuit c(10, 0);
    c.add(gate::cnot(0, 3));
    compile_result r = compile(c, chain_layout(10), k_model, 0);
    CHECK(r.total_pulses == 5 + 8 + 9 + 8 + 8 + 5);

    // the emitted shape: encode, approach, target op, target restore,
    // approach back, control restore
    std::vector<instr_kind> kinds;
    for (const auto& in : r.program.instructions)
        kinds.push_back(in.kind);
    CHECK(kinds == std::vector<instr_kind>{
                       instr_kind::control_encode, instr_kind::approach, instr_kind::target_gate,
                       instr_kind::restore_target, instr_kind::approach,
                       instr_kind::restore_control});
}

TEST_CASE("fan-out from a shared control is strictly cheaper than recompiling")
{
    chain_layout layout(10);
    circuit both(10, 0);
    both.add(gate::cnot(0, 2));
    both.add(gate::cnot(0, 4));
    int64_t fused = compile(both, layout, k_model, 0).total_pulses;

    circuit first(10, 0), second(10, 0);
    first.add(gate::cnot(0, 2));
    second.add(gate::cnot(0, 4));
    int64_t separate = compile(first, layout, k_model, 0).total_pulses +
                       compile(second, layout, k_model, 0).total_pulses;
    CHECK(fused < separate);
}

TEST_CASE("empty circuits compile to empty programs")
{
    circuit c(10, 0);
    compile_result r = compile(c, chain_layout(10), k_model);
    CHECK(r.total_pulses == 0);
    CHECK(r.program.instructions.empty());
    CHECK(r.breakdown.empty());
}

TEST_CASE("wires must fit the layout")
{
    circuit c(12, 0);
    c.add(gate::x(11));
    CHECK_THROWS_AS(compile(c, chain_layout(10), k_model), std::out_of_range);
}

TEST_CASE("compilation is deterministic")
{
    for (uint64_t seed = 0; seed < 10; seed++) {
        circuit c = random_circuit(8, 30, seed);
        compile_result a = compile(c, chain_layout(8), k_model);
        compile_result b = compile(c, chain_layout(8), k_model);
        CHECK(program_text(a.program) == program_text(b.program));
        CHECK(a.total_pulses == b.total_pulses);
    }
}

TEST_CASE("adding a gate never lowers the pulse count")
{
    std::mt19937_64 rng(31);
    for (uint64_t seed = 0; seed < 20; seed++) {
        circuit c = random_circuit(8, 1 + seed % 20, seed * 3 + 1);
        int64_t base = compile(c, chain_layout(8), k_model).total_pulses;
        unsigned a = rng() % 8, b = (a + 1 + rng() % 7) % 8;
        circuit extended = c;
        if (rng() % 2)
            extended.add(gate::h(a));
        else
            extended.add(gate::cnot(a, b));
        CHECK(compile(extended, chain_layout(8), k_model).total_pulses >= base);
    }
}

TEST_CASE("every control encoding is eventually reversed, LIFO")
{
    for (uint64_t seed = 0; seed < 10; seed++) {
        circuit c = random_circuit(8, 40, seed + 100);
        compile_result r = compile(c, chain_layout(8), k_model);
        std::vector<int32_t> stack;
        for (const auto& in : r.program.instructions) {
            if (in.kind == instr_kind::control_encode)
                stack.push_back(in.a);
            else if (in.kind == instr_kind::restore_control) {
                REQUIRE_FALSE(stack.empty());
                stack.pop_back();
            }
        }
        CHECK(stack.empty());
    }
    // the multi-control case unwinds through the controls in reverse order
    circuit mc(10, 0);
    mc.add(gate::mcx({{7, true}, {8, false}, {9, true}}, 2));
    compile_result r = compile(mc, chain_layout(10), k_model);
    std::vector<int32_t> encodes, restores;
    int32_t site = -1;
    for (const auto& in : r.program.instructions) {
        if (in.kind == instr_kind::approach)
            site = in.b;
        if (in.kind == instr_kind::control_encode)
            encodes.push_back(in.a);
        if (in.kind == instr_kind::restore_control)
            restores.push_back(site);
    }
    REQUIRE(encodes.size() == 3);
    REQUIRE(restores.size() == 3);
    CHECK(encodes[0] == restores[2]);
    CHECK(encodes[2] == restores[0]);
}

TEST_CASE("breakdown entries sum to the total")
{
    for (const auto* code : {&code_spec::steane(), &code_spec::shor()}) {
        code_compile_report rep = compile_code(*code, k_model);
        for (const compile_result* r : {&rep.encode, &rep.ec}) {
            int64_t sum = 0;
            for (const auto& e : r->breakdown)
                sum += e.pulses;
            CHECK(sum == r->total_pulses);
        }
        CHECK(rep.row.total == rep.row.encoding + rep.row.syndrome_recovery);
    }
}

TEST_CASE("pulse-count table sits inside the characteristic bands")
{
    auto rows = compile_code_tables(k_model);
    REQUIRE(rows.size() == 2);
    const auto& steane = rows[0];
    const auto& shor = rows[1];

    auto within = [](int64_t value, double center) {
        return value >= 0.75 * center && value <= 1.25 * center;
    };
    CHECK(within(steane.encoding, 464));
    CHECK(within(steane.syndrome_recovery, 3622));
    CHECK(within(steane.total, 4086));
    CHECK(within(shor.encoding, 397));
    CHECK(within(shor.syndrome_recovery, 2955));
    CHECK(within(shor.total, 3352));

    double ratio = static_cast<double>(shor.total) / static_cast<double>(steane.total);
    CHECK(ratio >= 0.72);
    CHECK(ratio <= 0.92);
}

TEST_CASE("per-cycle EC pulses are independent of the number of blocks")
{
    const auto& code = code_spec::steane();
    int64_t reference = ec_cycle_pulses(code, chain_layout(10, 1, 8, 10), k_model);
    for (int m : {2, 4, 8, 1024})
        CHECK(ec_cycle_pulses(code, chain_layout(10, m, 8, 10), k_model) == reference);
}

TEST_CASE("serial correction with one CU scales at least linearly")
{
    const auto& code = code_spec::steane();
    for (int m : {1, 2, 4, 8, 32}) {
        chain_layout layout(10, m, 8, 10);
        int64_t serial = serialized_ec_pulses(code, layout, k_model);
        CHECK(serial >= m * ec_cycle_pulses(code, layout, k_model));
    }
}

TEST_CASE("remote gate cost grows affinely with block distance")
{
    chain_layout layout(10, 32, 8, 10);

    int64_t adjacent = algorithm_phase_gate_cost(0, 1, layout, k_model);
    CHECK(adjacent > 0);

    // least-squares affine fit over k = 1..16; residual below one pulse
    std::vector<double> xs, ys;
    for (int k = 1; k <= 16; k++) {
        xs.push_back(k);
        ys.push_back(static_cast<double>(algorithm_phase_gate_cost(0, k, layout, k_model)));
    }
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); i++) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < xs.size(); i++) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    double slope = sxy / sxx, intercept = my - slope * mx;
    for (size_t i = 0; i < xs.size(); i++)
        CHECK(std::abs(ys[i] - (slope * xs[i] + intercept)) < 1.0);

    // degenerate case goes through the intra-block compiler
    circuit c(10, 0);
    c.add(gate::cnot(0, 1));
    CHECK(algorithm_phase_gate_cost(3, 3, layout, k_model) ==
          compile(c, layout, k_model).total_pulses);

    CHECK_THROWS_AS(algorithm_phase_gate_cost(0, 99, layout, k_model), std::out_of_range);
}

TEST_CASE("swap-chain schedule has bounded per-cycle cost")
{
    chain_layout layout(10, 32, 8, 10);
    auto schedule = swap_chain_schedule(7, layout, k_model);
    CHECK(schedule.size() == 7);
    int64_t bound = 3 * algorithm_phase_gate_cost(0, 1, layout, k_model);
    for (int64_t cost : schedule)
        CHECK(cost == bound);
}

TEST_CASE("trailing return travel is reported, not charged")
{
    circuit c(10, 0);
    c.add(gate::h(0));
    compile_result r = compile(c, chain_layout(10), k_model, 0);
    CHECK(r.total_pulses == 15);
    CHECK(r.trailing_return_pulses == k_model.approach_cost(9));

    circuit at_end(10, 0);
    at_end.add(gate::h(9));
    CHECK(compile(at_end, chain_layout(10), k_model, 9).trailing_return_pulses == 0);
}
