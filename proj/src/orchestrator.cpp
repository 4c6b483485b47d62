#include "gcq/orchestrator.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace gcq {

void noise_model::validate() const
{
    if (p_x < 0 || p_y < 0 || p_z < 0 || p_x + p_y + p_z > 1.0)
        throw std::invalid_argument("noise_model: rates must be >= 0 and sum to <= 1");
}

noise_model noise_model::uniform(double total_rate)
{
    noise_model n{total_rate / 3.0, total_rate / 3.0, total_rate / 3.0};
    n.validate();
    return n;
}

noise_model noise_model::from_config(const config& cfg)
{
    noise_model n;
    n.p_x = cfg.get_double("noise.p_x", 0.0);
    n.p_y = cfg.get_double("noise.p_y", 0.0);
    n.p_z = cfg.get_double("noise.p_z", 0.0);
    std::string mode = cfg.get_string("noise.granularity", "per_cycle");
    if (mode == "per_cycle")
        n.mode = granularity::per_cycle;
    else if (mode == "per_pulse_exposure")
        n.mode = granularity::per_pulse_exposure;
    else
        throw std::invalid_argument("noise.granularity must be per_cycle or per_pulse_exposure");
    n.validate();
    return n;
}

std::vector<uint8_t> stabilize(const std::vector<uint8_t>& cells)
{
    std::vector<uint8_t> out = cells;
    for (size_t i = 0; i < cells.size(); i++) {
        uint8_t left = i > 0 ? cells[i - 1] : 0;
        uint8_t right = i + 1 < cells.size() ? cells[i + 1] : 0;
        if (cells[i] == 1 && left == 0 && right == 0)
            out[i] = 0;
    }
    return out;
}

std::vector<uint8_t> cu_cell_pattern()
{
    return {1, 1};
}

uint64_t splitmix64(uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

device::device(const code_spec& code, const chain_layout& layout, const cost_model& model,
               label_plan plan, uint64_t seed)
    : code_(code),
      layout_(layout),
      model_(model),
      plan_(std::move(plan)),
      ec_(ec_circuit(code)),
      encode_(encode_circuit(code)),
      rng_(seed)
{
    if (layout_.block_size_qubits != static_cast<int>(code.block_size_qubits()))
        throw std::invalid_argument("device: layout block size does not fit the code");
    if (plan_.num_ss != static_cast<unsigned>(layout_.num_blocks))
        throw std::invalid_argument("device: label plan has the wrong station count");
    model_.validate();
    // Exact simulation of every block; keep the total amplitude budget sane.
    if (static_cast<uint64_t>(layout_.num_blocks) << code.block_size_qubits() > (1ull << 26))
        throw std::invalid_argument("device: too many blocks for exact simulation");

    for (int m = 0; m < layout_.num_blocks; m++) {
        blocks_.push_back(encode_logical(code, 1.0, 0.0, splitmix64(seed ^ (m + 1))));
        refs_.push_back(blocks_.back());
    }
    cus_.assign(layout_.num_blocks, cu_state{true, layout_.block_size_qubits - 1});

    chain_layout one_block = layout_;
    one_block.num_blocks = 1;
    compile_result ec_compiled = compile(ec_, one_block, model_);
    ec_pulses_ = ec_compiled.total_pulses;

    // Transition leg: walk to the station side of the block, run the label
    // comparator, absorb where the result says so.
    int comparator_steps = static_cast<int>(make_comparator(plan_.p).step_count());
    transition_pulses_ = ec_compiled.trailing_return_pulses +
                         instruction_cost(pulse_instruction::make_label_compute(0, comparator_steps),
                                          model_) +
                         model_.absorb_pulses;
    last_cycle_pulses_ = ec_pulses_ + 2 * transition_pulses_;
}

double device::block_fidelity(unsigned m) const
{
    return fidelity(blocks_.at(m), refs_.at(m));
}

unsigned device::sample_noise(const noise_model& noise)
{
    if (noise.is_zero())
        return 0;
    double px = noise.p_x, py = noise.p_y, pz = noise.p_z;
    if (noise.mode == noise_model::granularity::per_pulse_exposure) {
        // Scale single-pulse rates up to the pulse count of a whole cycle.
        auto exposure = [&](double p) {
            return 1.0 - std::pow(1.0 - p, static_cast<double>(last_cycle_pulses_));
        };
        px = exposure(px);
        py = exposure(py);
        pz = exposure(pz);
        if (px + py + pz > 1.0)
            throw std::invalid_argument("noise_model: per-pulse rates too large for exposure mode");
    }
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    unsigned injected = 0;
    for (auto& block : blocks_) {
        for (unsigned q = 0; q < code_.n_data; q++) {
            double u = dist(rng_);
            if (u < px)
                block.apply_pauli(q, pauli::x);
            else if (u < px + py)
                block.apply_pauli(q, pauli::y);
            else if (u < px + py + pz)
                block.apply_pauli(q, pauli::z);
            else
                continue;
            injected++;
        }
    }
    return injected;
}

cycle_report device::run_cycle(unsigned level_b, const std::vector<algorithm_gate>& gates,
                               const noise_model& noise)
{
    if (phase_ != device_phase::ec)
        throw std::logic_error("run_cycle: device is mid-cycle");
    noise.validate();

    cycle_report report;
    report.errors_injected = sample_noise(noise);

    // (1) Every block's CU runs the same EC program off the same pulses.
    for (auto& block : blocks_)
        ec_.apply_to(block);
    ledger_.ec += ec_pulses_;
    report.ec_pulses = ec_pulses_;

    // (2) CUs move into their stations; the label computation decides which
    // are absorbed.
    phase_ = device_phase::transition;
    report.active_after_transition.resize(num_blocks());
    for (unsigned m = 0; m < num_blocks(); m++) {
        cus_[m] = {plan_.active_at_level(m + 1, level_b), layout_.block_size_qubits - 1};
        report.active_after_transition[m] = cus_[m].active ? 1 : 0;
    }
    ledger_.transition += transition_pulses_;
    report.transition_pulses = transition_pulses_;

    // (3) Algorithm step with the surviving CUs. Global pulses drive every
    // active block identically; the addressed block must be active.
    phase_ = device_phase::algorithm;
    if (!gates.empty()) {
        circuit algo(code_.n_data, code_.n_ancilla);
        algo.set_chain_positions(encode_.chain_positions());
        for (const auto& ag : gates) {
            if (ag.block >= num_blocks())
                throw std::out_of_range("run_cycle: algorithm gate block out of range");
            if (!cus_[ag.block].active)
                throw std::runtime_error("run_cycle: algorithm gate addressed to a block with no "
                                         "active CU");
            algo.add(ag.g);
        }
        for (unsigned m = 0; m < num_blocks(); m++) {
            if (!cus_[m].active)
                continue;
            algo.apply_to(blocks_[m]);
            algo.apply_to(refs_[m]);
        }
        int64_t algo_pulses =
            compile(algo, layout_, model_, layout_.block_size_qubits - 1).total_pulses;
        ledger_.algorithm += algo_pulses;
        report.algorithm_pulses = algo_pulses;
    }

    // (4) The inverse pulse sequence re-emits every absorbed CU.
    for (unsigned m = 0; m < num_blocks(); m++)
        cus_[m] = {true, layout_.block_size_qubits - 1};
    ledger_.transition += transition_pulses_;
    phase_ = device_phase::ec;

    report.cycle_total = report.ec_pulses + 2 * report.transition_pulses + report.algorithm_pulses;
    last_cycle_pulses_ = report.cycle_total;
    report.block_fidelities.reserve(num_blocks());
    for (unsigned m = 0; m < num_blocks(); m++)
        report.block_fidelities.push_back(block_fidelity(m));
    return report;
}

void device::inject_error(unsigned block, unsigned wire, pauli p)
{
    if (block >= num_blocks())
        throw std::out_of_range("inject_error: block out of range");
    blocks_[block].apply_pauli(wire, p);
}

void device::check_end_cell(unsigned block, unsigned wire) const
{
    if (block != 0 || wire != 0)
        throw std::invalid_argument("end-cell I/O only reaches the boundary qubit "
                                    "(block 0, wire 0)");
}

void device::end_cell_prepare(unsigned block, unsigned wire, int bit)
{
    check_end_cell(block, wire);
    blocks_[0].erase(0);
    if (bit)
        blocks_[0].apply(gate::x(0));
}

int device::end_cell_read(unsigned block, unsigned wire)
{
    check_end_cell(block, wire);
    return blocks_[0].measure(0);
}

// ---------------------------------------------------------------------------
// Monte-Carlo sweep.

namespace {

// Net logical action of one noise pattern followed by EC, as (X-flip,
// Z-flip) bits. Probing with |0>_L and |+>_L separates the two components;
// on Pauli inputs EC lands back on a codeword, so both fidelities are 0/1.
struct pattern_classifier {
    const code_spec& code;
    circuit ec;
    state_vector probe_zero;
    state_vector probe_plus;
    std::unordered_map<uint64_t, uint8_t> cache;
    std::mutex mutex;

    explicit pattern_classifier(const code_spec& c)
        : code(c),
          ec(ec_circuit(c)),
          probe_zero(encode_logical(c, 1.0, 0.0)),
          probe_plus(encode_logical(c, 1.0, 1.0))
    {
    }

    uint8_t classify(uint32_t x_mask, uint32_t z_mask)
    {
        uint64_t key = (static_cast<uint64_t>(z_mask) << 20) | x_mask;
        {
            std::lock_guard<std::mutex> lock(mutex);
            auto it = cache.find(key);
            if (it != cache.end())
                return it->second;
        }

        uint8_t outcome = 0;
        const state_vector* probes[2] = {&probe_zero, &probe_plus};
        for (int which = 0; which < 2; which++) {
            state_vector s = *probes[which];
            s.seed_rng(key * 2 + which + 1);
            s.apply_pauli_string(x_mask, z_mask);
            ec.apply_to(s);
            double f = fidelity(s, *probes[which]);
            if (f > 1e-6 && f < 1.0 - 1e-6)
                throw std::logic_error("monte_carlo_sweep: EC left the codespace");
            if (f < 0.5)
                outcome |= 1u << which; // bit 0: X frame flip, bit 1: Z frame flip
        }

        std::lock_guard<std::mutex> lock(mutex);
        cache.emplace(key, outcome);
        return outcome;
    }
};

} // namespace

sweep_result monte_carlo_sweep(const code_spec& code, const std::vector<double>& rates,
                               unsigned cycles, uint64_t trials, uint64_t seed, unsigned threads)
{
    if (cycles < 1 || trials < 1)
        throw std::invalid_argument("monte_carlo_sweep: cycles and trials must be >= 1");
    for (double r : rates)
        if (!(r >= 0.0) || r >= 0.2)
            throw std::invalid_argument("monte_carlo_sweep: rates must sit in [0, 0.2)");

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());

    sweep_result result;
    result.code = code.name;
    result.cycles = cycles;
    result.seed = seed;

    pattern_classifier classifier(code);

    for (size_t ri = 0; ri < rates.size(); ri++) {
        const noise_model noise = noise_model::uniform(rates[ri]);
        std::vector<uint64_t> failures_per_thread(threads, 0);

        auto worker = [&](unsigned t) {
            uint64_t failures = 0;
            for (uint64_t trial = t; trial < trials; trial += threads) {
                std::mt19937_64 rng(splitmix64(seed ^ (ri + 1) * 0x51ed2701u ^ trial));
                std::uniform_real_distribution<double> dist(0.0, 1.0);
                uint8_t frame = 0;
                for (unsigned c = 0; c < cycles; c++) {
                    uint32_t x_mask = 0, z_mask = 0;
                    for (unsigned q = 0; q < code.n_data; q++) {
                        double u = dist(rng);
                        if (u < noise.p_x)
                            x_mask |= 1u << q;
                        else if (u < noise.p_x + noise.p_y) {
                            x_mask |= 1u << q;
                            z_mask |= 1u << q;
                        } else if (u < noise.p_x + noise.p_y + noise.p_z)
                            z_mask |= 1u << q;
                    }
                    if (x_mask == 0 && z_mask == 0)
                        continue; // EC is exact on clean codewords
                    frame ^= classifier.classify(x_mask, z_mask);
                }
                if (frame != 0)
                    failures++;
            }
            failures_per_thread[t] = failures;
        };

        std::vector<std::thread> pool;
        for (unsigned t = 1; t < threads; t++)
            pool.emplace_back(worker, t);
        worker(0);
        for (auto& th : pool)
            th.join();

        uint64_t failures = 0;
        for (uint64_t f : failures_per_thread)
            failures += f;

        sweep_point point;
        point.rate = rates[ri];
        point.trials = trials;
        point.failures = failures;
        point.logical_error_rate = static_cast<double>(failures) / static_cast<double>(trials);
        point.std_error = std::sqrt(point.logical_error_rate *
                                    (1.0 - point.logical_error_rate) /
                                    static_cast<double>(trials));
        result.points.push_back(point);
    }
    return result;
}

double log_log_slope(const sweep_result& result)
{
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : result.points)
        if (p.rate > 0 && p.logical_error_rate > 0)
            pts.emplace_back(std::log(p.rate), std::log(p.logical_error_rate));
    if (pts.size() < 2)
        throw std::invalid_argument("log_log_slope: need at least two nonzero points");
    double mx = 0, my = 0;
    for (auto [x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= pts.size();
    my /= pts.size();
    double sxy = 0, sxx = 0;
    for (auto [x, y] : pts) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    return sxy / sxx;
}

} // namespace gcq
