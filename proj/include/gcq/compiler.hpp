// Lowers block circuits into global-pulse programs: tracks the control
// unit's position, emits approach/operate/restore instruction sequences,
// and reuses an encoded control across consecutive gates that share it.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcq/circuit.hpp"
#include "gcq/codes.hpp"
#include "gcq/layout.hpp"
#include "gcq/pulses.hpp"

namespace gcq {

struct gate_cost_entry {
    size_t op_index = 0;
    std::string label;
    int64_t pulses = 0;
};

struct compile_result {
    pulse_program program;
    int64_t total_pulses = 0;
    std::vector<gate_cost_entry> breakdown; // sums to total_pulses
    std::vector<int> cu_path;               // wire sites in visit order
    // Travel from the final gate back to the switching-station side of the
    // block; reported but not included in total_pulses.
    int64_t trailing_return_pulses = 0;
};

compile_result compile(const circuit& c, const chain_layout& layout, const cost_model& model,
                       std::optional<int> cu_start = std::nullopt);

struct code_pulse_row {
    std::string code;
    int64_t encoding = 0;
    int64_t syndrome_recovery = 0;
    int64_t total = 0;
};

struct code_compile_report {
    code_pulse_row row;
    compile_result encode;
    compile_result ec;
};

code_compile_report compile_code(const code_spec& code, const cost_model& model);

// One row per code (Steane, Shor) under the default 8-cells-per-qubit
// geometry.
std::vector<code_pulse_row> compile_code_tables(const cost_model& model);

// Global pulses for one EC cycle. All blocks run the same program driven by
// the same pulses, so the count is independent of layout.num_blocks.
int64_t ec_cycle_pulses(const code_spec& code, const chain_layout& layout,
                        const cost_model& model);

// Cost of the serial alternative: one CU walks the device and corrects the
// blocks one after another.
int64_t serialized_ec_pulses(const code_spec& code, const chain_layout& layout,
                             const cost_model& model);

// Pulse cost of a controlled gate between the logical qubits of two blocks,
// executed by a single CU travelling the chain. Same-block requests fall
// back to an intra-block compile.
int64_t algorithm_phase_gate_cost(int block_a, int block_b, const chain_layout& layout,
                                  const cost_model& model);

// Alternative remote-gate schedule: shuttle the qubit one block per EC cycle
// with three adjacent-block CNOTs. Returns the per-cycle pulse costs.
std::vector<int64_t> swap_chain_schedule(int block_distance, const chain_layout& layout,
                                         const cost_model& model);

} // namespace gcq
