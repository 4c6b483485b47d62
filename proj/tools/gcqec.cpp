// gcqec: simulate and cost measurement-free error correction on a globally
// controlled 1D array.
//
//   gcqec encode   --code steane               verify an encoder run
//   gcqec compile  --code shor --phase both    pulse-count report
//   gcqec ec-cycle --code steane --blocks 4    full machine cycles
//   gcqec sweep    --code shor --rates ...     Monte-Carlo logical rates
//   gcqec labels   --mode supercu --p 3 ...    switching-station labels
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "gcq/codes.hpp"
#include "gcq/compiler.hpp"
#include "gcq/config.hpp"
#include "gcq/labels.hpp"
#include "gcq/orchestrator.hpp"
#include "gcq/version.hpp"

using nlohmann::json;
using namespace gcq;

namespace {

std::ofstream open_out(const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    return out;
}

config load_config(const std::string& path)
{
    return path.empty() ? config{} : config::from_file(path);
}

int cmd_encode(const std::string& code_name, const std::string& state_name, uint64_t seed,
               const std::string& dump_path)
{
    const code_spec& code = code_spec::by_name(code_name);
    cplx alpha{1.0, 0.0}, beta{0.0, 0.0};
    if (state_name == "one") {
        alpha = 0.0;
        beta = 1.0;
    } else if (state_name == "plus") {
        alpha = beta = 1.0;
    } else if (state_name == "random") {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        alpha = {u(rng), u(rng)};
        beta = {u(rng), u(rng)};
    } else if (state_name != "zero") {
        throw std::runtime_error("unknown --state (zero|one|plus|random)");
    }

    state_vector encoded = encode_logical(code, alpha, beta, seed);
    std::cout << code.name << ": " << code.n_data << " data + " << code.n_ancilla
              << " ancilla qubits, block of "
              << chain_layout(code.block_size_qubits()).total_cells() << " cells\n";

    bool all_ok = true;
    for (size_t i = 0; i < code.stabilizers.size(); i++) {
        state_vector t = encoded;
        t.apply_pauli_string(code.stabilizers[i].x_mask, code.stabilizers[i].z_mask);
        double f = fidelity(t, encoded);
        bool ok = f > 1.0 - 1e-9;
        all_ok &= ok;
        std::cout << "  stabilizer " << i + 1 << ": eigenvalue "
                  << (ok ? "+1" : "NOT +1") << "\n";
    }
    if (!dump_path.empty()) {
        auto out = open_out(dump_path);
        dump_amplitudes(encoded, out);
        std::cout << "amplitudes written to " << dump_path << "\n";
    }
    std::cout << (all_ok ? "encoding verified" : "encoding FAILED") << "\n";
    return all_ok ? 0 : 1;
}

// Compile a circuit read from the line-oriented text format.
int cmd_compile_file(const std::string& circuit_path, unsigned n_data, unsigned n_ancilla,
                     const std::string& cost_path, const std::string& out_path)
{
    std::ifstream in(circuit_path);
    if (!in)
        throw std::runtime_error("cannot open circuit file: " + circuit_path);
    circuit c = circuit::read_text(in, n_data, n_ancilla);
    cost_model model = cost_model::from_config(load_config(cost_path));
    chain_layout layout(static_cast<int>(c.n_wires()));
    compile_result r = compile(c, layout, model);
    std::cout << circuit_path << ": " << c.size() << " ops, " << r.total_pulses << " pulses ("
              << r.trailing_return_pulses << " trailing return, not charged)\n";
    if (!out_path.empty()) {
        json rep;
        rep["version"] = k_version;
        rep["circuit"] = circuit_path;
        rep["total_pulses"] = r.total_pulses;
        rep["trailing_return_pulses"] = r.trailing_return_pulses;
        rep["cu_path"] = r.cu_path;
        json arr = json::array();
        for (const auto& e : r.breakdown)
            arr.push_back({{"op", e.op_index}, {"label", e.label}, {"pulses", e.pulses}});
        rep["breakdown"] = arr;
        auto out = open_out(out_path);
        out << rep.dump(2) << "\n";
        std::cout << "report written to " << out_path << "\n";
    }
    return 0;
}

int cmd_compile(const std::string& code_name, const std::string& phase,
                const std::string& cost_path, const std::string& out_path,
                const std::string& csv_path)
{
    cost_model model = cost_model::from_config(load_config(cost_path));
    json report;
    report["version"] = k_version;
    report["rows"] = json::array();

    std::vector<std::string> codes;
    if (code_name == "all")
        codes = {"steane", "shor"};
    else
        codes = {code_name};

    std::ofstream csv;
    if (!csv_path.empty()) {
        csv = open_out(csv_path);
        csv << "# gcqec v" << k_version << "\n";
        csv << "code,phase,op_index,label,pulses\n";
    }

    for (const auto& name : codes) {
        code_compile_report rep = compile_code(code_spec::by_name(name), model);
        json row;
        row["code"] = name;
        if (phase == "encode" || phase == "both")
            row["encoding_pulses"] = rep.row.encoding;
        if (phase == "ec" || phase == "both")
            row["syndrome_recovery_pulses"] = rep.row.syndrome_recovery;
        if (phase == "both")
            row["total_pulses"] = rep.row.total;
        row["trailing_return_pulses"] = rep.ec.trailing_return_pulses;

        auto breakdown_json = [](const compile_result& r) {
            json arr = json::array();
            for (const auto& e : r.breakdown)
                arr.push_back({{"op", e.op_index}, {"label", e.label}, {"pulses", e.pulses}});
            return arr;
        };
        if (phase != "ec")
            row["encode_breakdown"] = breakdown_json(rep.encode);
        if (phase != "encode") {
            row["ec_breakdown"] = breakdown_json(rep.ec);
            row["ec_cu_path"] = rep.ec.cu_path;
        }
        report["rows"].push_back(row);

        if (csv.is_open()) {
            if (phase != "ec")
                for (const auto& e : rep.encode.breakdown)
                    csv << name << ",encode," << e.op_index << ',' << e.label << ',' << e.pulses
                        << "\n";
            if (phase != "encode")
                for (const auto& e : rep.ec.breakdown)
                    csv << name << ",ec," << e.op_index << ',' << e.label << ',' << e.pulses
                        << "\n";
        }

        std::cout << name << ":";
        if (phase != "ec")
            std::cout << " encoding " << rep.row.encoding;
        if (phase != "encode")
            std::cout << " syndrome/recovery " << rep.row.syndrome_recovery;
        if (phase == "both")
            std::cout << " total " << rep.row.total;
        std::cout << "\n";
    }

    if (!out_path.empty()) {
        auto out = open_out(out_path);
        out << report.dump(2) << "\n";
        std::cout << "report written to " << out_path << "\n";
    }
    return 0;
}

int cmd_ec_cycle(const std::string& code_name, int blocks, int cycles, uint64_t seed,
                 double rate, int level, const std::string& config_path)
{
    const code_spec& code = code_spec::by_name(code_name);
    config cfg = load_config(config_path);
    chain_layout defaults(code.block_size_qubits(), blocks, 8, 10);
    chain_layout layout = chain_layout::from_config(cfg, defaults);
    layout.num_blocks = blocks;
    cost_model model = cost_model::from_config(cfg);
    noise_model noise = cfg.has("noise.p_x") || cfg.has("noise.p_y") || cfg.has("noise.p_z")
                            ? noise_model::from_config(cfg)
                            : (rate > 0 ? noise_model::uniform(rate) : noise_model{});

    label_plan plan = hierarchy_labels(1, code.block_size_qubits(), blocks);
    device dev(code, layout, model, plan, seed);
    if (level < 0)
        level = 1; // single surviving CU

    std::cout << "# code=" << code.name << " blocks=" << blocks << " cycles=" << cycles
              << " seed=" << seed << " level=" << level << "\n";
    std::cout << "cycle,ec_pulses,transition_pulses,algorithm_pulses,cycle_total,min_fidelity,"
                 "errors_injected\n";
    for (int k = 0; k < cycles; k++) {
        cycle_report rep = dev.run_cycle(static_cast<unsigned>(level), {}, noise);
        double min_f = 1.0;
        for (double f : rep.block_fidelities)
            min_f = std::min(min_f, f);
        std::cout << k + 1 << ',' << rep.ec_pulses << ',' << rep.transition_pulses << ','
                  << rep.algorithm_pulses << ',' << rep.cycle_total << ',' << min_f << ','
                  << rep.errors_injected << "\n";
    }
    std::cout << "# ledger: ec=" << dev.ledger().ec << " transition=" << dev.ledger().transition
              << " algorithm=" << dev.ledger().algorithm << " total=" << dev.ledger().total()
              << "\n";
    return 0;
}

int cmd_sweep(const std::string& code_name, const std::vector<double>& rates, uint64_t trials,
              int cycles, uint64_t seed, unsigned threads, const std::string& out_path)
{
    const code_spec& code = code_spec::by_name(code_name);
    sweep_result res = monte_carlo_sweep(code, rates, cycles, trials, seed, threads);

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file = open_out(out_path);
        os = &file;
    }
    *os << "# gcqec v" << k_version << " code=" << code.name << " cycles=" << cycles
        << " seed=" << seed << " trials=" << trials << "\n";
    *os << "rate,trials,failures,logical_error_rate,std_error\n";
    for (const auto& p : res.points)
        *os << p.rate << ',' << p.trials << ',' << p.failures << ',' << p.logical_error_rate
            << ',' << p.std_error << "\n";
    if (!out_path.empty())
        std::cout << "sweep written to " << out_path << "\n";
    if (res.points.size() >= 2) {
        bool fittable = true;
        for (const auto& p : res.points)
            fittable &= p.failures > 0;
        if (fittable)
            std::cout << "log-log slope: " << log_log_slope(res) << "\n";
    }
    return 0;
}

int cmd_labels(const std::string& mode, unsigned p, unsigned L, unsigned num_ss, int level,
               const std::string& half, const std::string& out_path)
{
    label_plan plan;
    if (mode == "hierarchy") {
        plan = hierarchy_labels(p, L, num_ss);
    } else if (mode == "supercu") {
        plan = supercu_labels(p, num_ss, L);
    } else if (mode == "composite") {
        plan = composite_labels(hierarchy_labels(p, L, num_ss), supercu_labels(p, num_ss, L));
    } else if (mode == "explicit") {
        // Store the hierarchy activation pattern one bit per level.
        label_plan h = hierarchy_labels(p, L, num_ss);
        std::vector<std::vector<uint8_t>> patterns(p, std::vector<uint8_t>(num_ss, 0));
        for (unsigned lev = 0; lev < p; lev++)
            for (unsigned i = 1; i <= num_ss; i++)
                patterns[lev][i - 1] = h.active_at_level(i, lev) ? 1 : 0;
        plan = explicit_per_level_labels(p, patterns);
    } else {
        throw std::runtime_error("unknown --mode (hierarchy|supercu|composite|explicit)");
    }

    unsigned b = level < 0 ? 0 : static_cast<unsigned>(level);
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file = open_out(out_path);
        os = &file;
    }
    *os << "# gcqec v" << k_version << " mode=" << mode << " p=" << p << " L=" << L
        << " num_ss=" << num_ss << " level=" << b << " label_bits=" << plan.total_label_bits()
        << "\n";
    *os << "index,label,active_at_level_" << b << "\n";
    for (unsigned i = 1; i <= num_ss; i++) {
        bool active = mode == "composite" ? plan.active_at_level(i, b, half == "b" ? 1 : 0)
                                          : plan.active_at_level(i, b);
        *os << i << ',' << plan.label(i) << ',' << (active ? 1 : 0) << "\n";
    }
    if (!out_path.empty())
        std::cout << "labels written to " << out_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"globally controlled array: QEC simulation and pulse costing"};
    app.set_version_flag("--version", std::string("gcqec ") + k_version);
    app.require_subcommand(1);

    std::string code = "steane", state = "zero", dump, cost_path, out_path, csv_path;
    std::string config_path, mode = "hierarchy", half = "a";
    uint64_t seed = 1, trials = 100000;
    int blocks = 1, cycles = 1, level = -1;
    unsigned p = 2, L = 16, num_ss = 16, threads = 0;
    double rate = 0.0;
    std::vector<double> rates;
    std::string phase = "both";

    auto* enc = app.add_subcommand("encode", "run and verify an encoder");
    enc->add_option("--code", code, "steane|shor");
    enc->add_option("--state", state, "zero|one|plus|random");
    enc->add_option("--seed", seed);
    enc->add_option("--dump", dump, "write amplitudes to a file");

    auto* comp = app.add_subcommand("compile", "pulse-count report");
    comp->add_option("--code", code, "steane|shor|all");
    comp->add_option("--phase", phase, "encode|ec|both");
    comp->add_option("--cost-model", cost_path, "cost model config file");
    comp->add_option("--out", out_path, "JSON report path");
    comp->add_option("--csv", csv_path, "per-gate breakdown CSV path");
    std::string circuit_path;
    unsigned n_data = 0, n_ancilla = 0;
    comp->add_option("--circuit", circuit_path, "compile a circuit text file instead of a code");
    comp->add_option("--data", n_data, "data wires of --circuit");
    comp->add_option("--ancilla", n_ancilla, "ancilla wires of --circuit");

    auto* ecc = app.add_subcommand("ec-cycle", "run full machine cycles");
    ecc->add_option("--code", code);
    ecc->add_option("--blocks", blocks);
    ecc->add_option("--cycles", cycles);
    ecc->add_option("--seed", seed);
    ecc->add_option("--rate", rate, "uniform per-qubit Pauli rate per cycle");
    ecc->add_option("--level", level, "concatenation level for the algorithm phase");
    ecc->add_option("--config", config_path, "layout/cost/noise config file");

    auto* sw = app.add_subcommand("sweep", "Monte-Carlo logical error rates");
    sw->add_option("--code", code);
    sw->add_option("--rates", rates, "physical rates")->delimiter(',');
    sw->add_option("--trials", trials);
    sw->add_option("--cycles", cycles);
    sw->add_option("--seed", seed);
    sw->add_option("--threads", threads);
    sw->add_option("--out", out_path, "CSV path");

    auto* lb = app.add_subcommand("labels", "switching-station label plans");
    lb->add_option("--mode", mode, "hierarchy|supercu|composite|explicit");
    lb->add_option("--p", p);
    lb->add_option("--L", L);
    lb->add_option("--num-ss", num_ss);
    lb->add_option("--level", level);
    lb->add_option("--half", half, "composite half to query (a|b)");
    lb->add_option("--out", out_path, "CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (enc->parsed())
            return cmd_encode(code, state, seed, dump);
        if (comp->parsed()) {
            if (!circuit_path.empty())
                return cmd_compile_file(circuit_path, n_data, n_ancilla, cost_path, out_path);
            return cmd_compile(code, phase, cost_path, out_path, csv_path);
        }
        if (ecc->parsed())
            return cmd_ec_cycle(code, blocks, cycles, seed, rate, level, config_path);
        if (sw->parsed()) {
            if (rates.empty())
                rates = {1e-3, 3e-3, 1e-2};
            return cmd_sweep(code, rates, trials, cycles, seed, threads, out_path);
        }
        if (lb->parsed())
            return cmd_labels(mode, p, L, num_ss, level, half, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
