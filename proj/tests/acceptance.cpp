// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Run via ctest (target "acceptance") or directly from the build tree.
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gcq/codes.hpp"
#include "gcq/compiler.hpp"
#include "gcq/labels.hpp"
#include "gcq/orchestrator.hpp"

using namespace gcq;

namespace {

struct harness {
    int failures = 0;

    void run(const std::string& name, const std::function<bool(std::string&)>& body)
    {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), dt,
                    detail.empty() ? "" : " — ", detail.c_str());
        std::fflush(stdout);
        if (!ok)
            failures++;
    }
};

state_vector random_logical(const code_spec& code, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return encode_logical(code, {u(rng), u(rng)}, {u(rng), u(rng)}, seed);
}

char buffer[256];

std::string fmt(const char* f, ...)
{
    va_list args;
    va_start(args, f);
    std::vsnprintf(buffer, sizeof buffer, f, args);
    va_end(args);
    return buffer;
}

// 1. Exhaustive single-error correction over 20 random logical states.
bool criterion_single_error(std::string& detail)
{
    for (const auto* code : {&code_spec::steane(), &code_spec::shor()}) {
        circuit ec = ec_circuit(*code);
        for (uint64_t s = 1; s <= 20; s++) {
            state_vector ref = random_logical(*code, s);
            for (unsigned q = 0; q < code->n_data; q++) {
                for (pauli p : {pauli::x, pauli::y, pauli::z}) {
                    state_vector sv = ref;
                    sv.seed_rng(s * 1000 + q * 3 + static_cast<uint64_t>(p));
                    sv.apply_pauli(q, p);
                    ec.apply_to(sv);
                    double f = fidelity(sv, ref);
                    if (f < 1.0 - 1e-9) {
                        detail = fmt("%s state %lu qubit %u pauli %d: fidelity %.12f",
                                     code->name.c_str(), s, q, static_cast<int>(p), f);
                        return false;
                    }
                }
            }
        }
    }
    detail = "21 + 27 errors x 20 states, fidelity >= 1 - 1e-9";
    return true;
}

// 2. Coherent-correction factorization with deltas (0.3, 0.2, 0.1).
bool criterion_factorization(std::string& detail)
{
    double worst_fid = 1.0, worst_sv = 0.0;
    for (const auto* code : {&code_spec::steane(), &code_spec::shor()}) {
        for (unsigned q = 0; q < code->n_data; q++) {
            auto rep = coherent_ec_experiment(*code, 0.3, 0.2, 0.1, q, 1e-8);
            worst_fid = std::min({worst_fid, rep.data_fidelity, rep.data_fidelity_after_erase});
            worst_sv = std::max(worst_sv, rep.second_schmidt_value);
            if (rep.data_fidelity < 1.0 - 1e-9 || !rep.factorized ||
                !rep.factorized_after_erase || !rep.ancilla_reset) {
                detail = fmt("%s qubit %u: fid %.12f schmidt2 %.2e", code->name.c_str(), q,
                             rep.data_fidelity, rep.second_schmidt_value);
                return false;
            }
        }
    }
    detail = fmt("16 experiments, worst fidelity %.12f, worst schmidt2 %.1e", worst_fid, worst_sv);
    return true;
}

// 3. Characteristic pulse table: totals/encodings within 25%, ratio band.
bool criterion_table(std::string& detail)
{
    auto rows = compile_code_tables(cost_model{});
    const auto& steane = rows[0];
    const auto& shor = rows[1];
    auto within = [](int64_t v, double center) {
        return v >= 0.75 * center && v <= 1.25 * center;
    };
    double ratio = static_cast<double>(shor.total) / static_cast<double>(steane.total);
    detail = fmt("steane %ld/%ld/%ld, shor %ld/%ld/%ld, ratio %.3f", steane.encoding,
                 steane.syndrome_recovery, steane.total, shor.encoding, shor.syndrome_recovery,
                 shor.total, ratio);
    return within(steane.total, 4086) && within(shor.total, 3352) &&
           within(steane.encoding, 464) && within(shor.encoding, 397) && ratio >= 0.72 &&
           ratio <= 0.92;
}

// 4. Primitive pulse counts.
bool criterion_primitives(std::string& detail)
{
    cost_model m;
    chain_layout layout(10);

    circuit one(10, 0);
    one.add(gate::h(4));
    int64_t one_cost = compile(one, layout, m, 4).total_pulses;

    int approach3 = m.approach_cost(3);

    circuit fan(10, 0);
    fan.add(gate::cnot(0, 2));
    fan.add(gate::cnot(0, 4));
    circuit g1(10, 0), g2(10, 0);
    g1.add(gate::cnot(0, 2));
    g2.add(gate::cnot(0, 4));
    int64_t fused = compile(fan, layout, m, 0).total_pulses;
    int64_t separate =
        compile(g1, layout, m, 0).total_pulses + compile(g2, layout, m, 0).total_pulses;

    detail = fmt("one-qubit %ld, approach(3) %d, fan-out %ld < %ld", one_cost, approach3, fused,
                 separate);
    return one_cost == 15 && approach3 == 8 && fused < separate;
}

// 5. Constant-time parallel EC vs linear serial correction.
bool criterion_parallel_ec(std::string& detail)
{
    cost_model m;
    const auto& code = code_spec::steane();
    std::set<int64_t> counts;
    for (int blocks : {1, 2, 4, 8, 1024})
        counts.insert(ec_cycle_pulses(code, chain_layout(10, blocks, 8, 10), m));
    bool constant = counts.size() == 1;

    bool serial_linear = true;
    for (int blocks : {1, 2, 4, 8, 64}) {
        chain_layout layout(10, blocks, 8, 10);
        serial_linear &= serialized_ec_pulses(code, layout, m) >=
                         blocks * ec_cycle_pulses(code, layout, m);
    }
    detail = fmt("per-cycle pulses %ld for every M; serial grows linearly", *counts.begin());
    return constant && serial_linear;
}

// 6. Label machinery against its oracles.
bool criterion_labels(std::string& detail)
{
    auto opow = [](uint64_t base, unsigned e) {
        uint64_t v = 1;
        while (e-- > 0) {
            if (v > (uint64_t{1} << 40))
                return uint64_t{1} << 40;
            v *= base;
        }
        return v;
    };

    for (unsigned p : {2u, 3u, 4u}) {
        for (unsigned L : {2u, 4u, 16u}) {
            unsigned num_ss = static_cast<unsigned>(std::min<uint64_t>(opow(L, p - 1), 4096));
            label_plan plan = hierarchy_labels(p, L, num_ss);
            for (unsigned i = 1; i <= num_ss; i++) {
                uint32_t count = 0;
                for (unsigned j = 1; j < p; j++)
                    if (i % opow(L, j) == 1)
                        count++;
                uint32_t want = i == 1 ? p : count;
                if (plan.label(i) != want) {
                    detail = fmt("hierarchy p=%u L=%u station %u: %u != %u", p, L, i,
                                 plan.label(i), want);
                    return false;
                }
            }
            // subset hierarchy across all level pairs
            for (unsigned b = 0; b < p; b++)
                for (unsigned i = 1; i <= num_ss; i++)
                    if (plan.active_at_level(i, b + 1) && !plan.active_at_level(i, b)) {
                        detail = fmt("hierarchy p=%u L=%u: level %u not nested in %u", p, L,
                                     b + 1, b);
                        return false;
                    }
        }
    }

    comparator_program prog = make_comparator(8);
    for (uint32_t label = 0; label <= 8; label++)
        for (uint32_t b = 0; b <= 8; b++)
            if (evaluate(prog, label, b) != (label >= b ? 1 : 0)) {
                detail = fmt("comparator mismatch at label %u b %u", label, b);
                return false;
            }
    if (static_cast<double>(prog.step_count()) > 6.0 * std::log2(8)) {
        detail = "comparator exceeds the logarithmic step bound";
        return false;
    }

    label_plan sc = supercu_labels(3, 16);
    std::vector<unsigned> active;
    for (unsigned i = 1; i <= 16; i++)
        if (sc.active_at_level(i, 1))
            active.push_back(i);
    if (active != std::vector<unsigned>{1, 2, 3, 6, 7, 8, 11, 12, 13}) {
        detail = "super-CU level-1 offsets are wrong";
        return false;
    }
    detail = fmt("oracle equality, comparator 9x9 exhaustive in %zu steps, offsets match",
                 prog.step_count());
    return true;
}

// 7. Zeno rule, exhaustively to length 12, plus framing fixed points.
bool criterion_zeno(std::string& detail)
{
    for (unsigned len = 1; len <= 12; len++) {
        for (uint32_t bits = 0; bits < (1u << len); bits++) {
            std::vector<uint8_t> in(len);
            for (unsigned i = 0; i < len; i++)
                in[i] = (bits >> i) & 1;
            std::vector<uint8_t> out = stabilize(in);
            for (unsigned i = 0; i < len; i++) {
                uint8_t left = i > 0 ? in[i - 1] : 0;
                uint8_t right = i + 1 < len ? in[i + 1] : 0;
                bool lone = in[i] == 1 && left == 0 && right == 0;
                if (out[i] != (lone ? 0 : in[i])) {
                    detail = fmt("pattern %u length %u mishandled at cell %u", bits, len, i);
                    return false;
                }
            }
        }
    }

    std::vector<label_plan> plans;
    plans.push_back(hierarchy_labels(3, 4, 256));
    plans.push_back(hierarchy_labels(1, 10, 64));
    plans.push_back(supercu_labels(3, 256));
    for (const auto& plan : plans)
        for (unsigned i = 1; i <= plan.num_ss; i++) {
            auto cells = label_cell_pattern(plan.label(i), plan.label_bits);
            if (stabilize(cells) != cells) {
                detail = fmt("label framing of station %u is not a fixed point", i);
                return false;
            }
        }
    if (stabilize(cu_cell_pattern()) != cu_cell_pattern()) {
        detail = "CU pattern is not a fixed point";
        return false;
    }
    detail = "all 2^1..2^12 patterns, all generated framings";
    return true;
}

// 8. Distance-3 scaling: log-log slope 2.0 +- 0.3 for both codes.
bool criterion_slope(std::string& detail)
{
    const std::vector<double> rates = {1e-3, 3e-3, 1e-2};
    const std::vector<uint64_t> trials = {4000000, 1000000, 200000};
    std::string parts;
    for (const auto* code : {&code_spec::steane(), &code_spec::shor()}) {
        sweep_result combined;
        combined.code = code->name;
        for (size_t i = 0; i < rates.size(); i++) {
            auto res = monte_carlo_sweep(*code, {rates[i]}, 1, trials[i], 4242 + i);
            combined.points.push_back(res.points[0]);
            if (res.points[0].failures == 0) {
                detail = fmt("%s rate %.0e: no failures observed", code->name.c_str(), rates[i]);
                return false;
            }
        }
        double slope = log_log_slope(combined);
        parts += fmt("%s slope %.3f  ", code->name.c_str(), slope);
        if (slope < 1.7 || slope > 2.3) {
            detail = parts + "(outside 2.0 +- 0.3)";
            return false;
        }
    }
    detail = parts + fmt("(>= 1e5 trials per point)");
    return true;
}

// 9. Sub-computer overhead arithmetic.
bool criterion_subcomputer(std::string& detail)
{
    int64_t plain = 80000 / chain_layout(1, 1, 8).total_cells();
    int64_t with_subcomputers = 80000 / subcomputer_cell_cost(900, 0);
    detail = fmt("plain %ld qubits, sub-computer layout %ld qubits", plain, with_subcomputers);
    return plain >= 10000 && with_subcomputers < 900;
}

} // namespace

int main()
{
    harness h;
    h.run("1. single-error correction, both codes, exhaustive", criterion_single_error);
    h.run("2. coherent correction factorizes the data register", criterion_factorization);
    h.run("3. characteristic pulse table within 25% bands", criterion_table);
    h.run("4. pulse primitives (15 / 8 / fan-out)", criterion_primitives);
    h.run("5. constant-time parallel EC, linear serial alternative", criterion_parallel_ec);
    h.run("6. label machinery vs oracles", criterion_labels);
    h.run("7. zeno lone-1 reset, exhaustive", criterion_zeno);
    h.run("8. distance-3 log-log slope", criterion_slope);
    h.run("9. sub-computer cell overhead", criterion_subcomputer);

    if (h.failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", h.failures);
    return h.failures;
}
