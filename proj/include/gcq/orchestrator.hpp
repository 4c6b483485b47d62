// Full machine cycle: parallel EC on every block, CU deactivation through
// the switching stations, algorithm steps on the surviving CUs, and
// reactivation. Also the Zeno lone-1 reset, end-cell I/O and Monte-Carlo
// logical error sweeps.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcq/codes.hpp"
#include "gcq/compiler.hpp"
#include "gcq/config.hpp"
#include "gcq/labels.hpp"
#include "gcq/layout.hpp"
#include "gcq/pulses.hpp"
#include "gcq/state_vector.hpp"

namespace gcq {

// Independent per-qubit Pauli channel applied to each block's data register
// before every EC pass. Ancillas are freshly erased at their point of use,
// so the channel acts on the data wires.
struct noise_model {
    double p_x = 0.0;
    double p_y = 0.0;
    double p_z = 0.0;
    enum class granularity : uint8_t { per_cycle, per_pulse_exposure };
    granularity mode = granularity::per_cycle;

    void validate() const;
    bool is_zero() const { return p_x == 0.0 && p_y == 0.0 && p_z == 0.0; }
    static noise_model uniform(double total_rate); // split evenly over X/Y/Z
    static noise_model from_config(const config& cfg);
};

// One simultaneous pass of the dissipative lone-1 reset: any 1 whose two
// neighbors are 0 (chain ends count as 0) drops to 0.
std::vector<uint8_t> stabilize(const std::vector<uint8_t>& cells);

// The CU itself is a guarded cell pattern, a fixed point of stabilize().
std::vector<uint8_t> cu_cell_pattern();

struct algorithm_gate {
    unsigned block = 0; // must carry an active CU
    gate g;
};

struct cycle_report {
    int64_t ec_pulses = 0;
    int64_t transition_pulses = 0; // one direction; charged twice per cycle
    int64_t algorithm_pulses = 0;
    int64_t cycle_total = 0;
    std::vector<double> block_fidelities;
    std::vector<uint8_t> active_after_transition;
    unsigned errors_injected = 0;
};

enum class device_phase : uint8_t { ec, transition, algorithm };

// One CU per block; global pulses move every active CU identically, so
// between cycles they all rest at the station side of their block.
struct cu_state {
    bool active = true;
    int position = 0; // chain slot within the block
};

struct pulse_ledger {
    int64_t ec = 0;
    int64_t transition = 0;
    int64_t algorithm = 0;
    int64_t total() const { return ec + transition + algorithm; }
};

class device {
public:
    device(const code_spec& code, const chain_layout& layout, const cost_model& model,
           label_plan plan, uint64_t seed);

    cycle_report run_cycle(unsigned level_b, const std::vector<algorithm_gate>& gates,
                           const noise_model& noise);

    void inject_error(unsigned block, unsigned wire, pauli p);

    // The only measurement-like primitives the device exposes, on the chain
    // boundary qubit (block 0, wire 0).
    void end_cell_prepare(unsigned block, unsigned wire, int bit);
    int end_cell_read(unsigned block, unsigned wire);

    unsigned num_blocks() const { return static_cast<unsigned>(blocks_.size()); }
    const code_spec& code() const { return code_; }
    const state_vector& block_state(unsigned m) const { return blocks_.at(m); }
    state_vector& mutable_block_state(unsigned m) { return blocks_.at(m); }
    double block_fidelity(unsigned m) const;
    bool cu_active(unsigned m) const { return cus_.at(m).active; }
    const std::vector<cu_state>& cu_states() const { return cus_; }
    device_phase phase() const { return phase_; }
    const pulse_ledger& ledger() const { return ledger_; }
    int64_t ec_pulses_per_cycle() const { return ec_pulses_; }
    int64_t transition_pulses_per_leg() const { return transition_pulses_; }

private:
    void check_end_cell(unsigned block, unsigned wire) const;
    unsigned sample_noise(const noise_model& noise);

    code_spec code_;
    chain_layout layout_;
    cost_model model_;
    label_plan plan_;
    circuit ec_;
    circuit encode_;
    std::vector<state_vector> blocks_;
    std::vector<state_vector> refs_;
    std::vector<cu_state> cus_;
    device_phase phase_ = device_phase::ec;
    pulse_ledger ledger_;
    int64_t ec_pulses_ = 0;
    int64_t transition_pulses_ = 0;
    int64_t last_cycle_pulses_ = 0;
    std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Monte-Carlo logical error estimation.

struct sweep_point {
    double rate = 0.0;
    uint64_t trials = 0;
    uint64_t failures = 0;
    double logical_error_rate = 0.0;
    double std_error = 0.0;
};

struct sweep_result {
    std::string code;
    unsigned cycles = 1;
    uint64_t seed = 0;
    std::vector<sweep_point> points;
};

// For each rate: `trials` independent runs of `cycles` noise+EC rounds on
// one block, each sampled error pattern pushed through the full state-vector
// EC; a trial fails when the net logical frame is not the identity. Each
// distinct error pattern is simulated once and cached (EC is deterministic
// on Pauli inputs). Trials draw seeds from the master seed by splitmix, so
// results are reproducible and thread-count independent.
sweep_result monte_carlo_sweep(const code_spec& code, const std::vector<double>& rates,
                               unsigned cycles, uint64_t trials, uint64_t seed,
                               unsigned threads = 0);

// Least-squares slope of log(logical rate) against log(physical rate).
double log_log_slope(const sweep_result& result);

uint64_t splitmix64(uint64_t x);

} // namespace gcq
