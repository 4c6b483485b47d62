// Abstract pulse-machine instruction set and the global-pulse cost model.
//
// Every primitive the control unit can perform is an instruction with a
// deterministic pulse cost. Programs are flat instruction sequences; their
// cost is the plain sum of instruction costs.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gcq/config.hpp"

namespace gcq {

// Pulse counts for the primitive operations. Defaults reproduce the
// worked single-qubit (8 + 7) and controlled-gate (5 / 2*(d+1) / 9 / 8)
// figures; approach cost for qubit-index distance d is
//   approach_pulses_per_step * (d + approach_step_offset).
struct cost_model {
    int one_qubit_op_pulses = 8;
    int one_qubit_restore_pulses = 7;
    int control_interact_pulses = 5;
    int target_op_pulses = 9;
    int target_restore_pulses = 8;
    int approach_pulses_per_step = 2;
    int approach_step_offset = 1;
    int absorb_pulses = 10;
    int emit_pulses = 10; // must equal absorb_pulses (absorption is reversible)

    void validate() const;

    int one_qubit_total() const { return one_qubit_op_pulses + one_qubit_restore_pulses; }
    int approach_cost(int distance) const;

    static cost_model from_config(const config& cfg);
    static cost_model from_config(const config& cfg, const cost_model& defaults);
};

enum class instr_kind : uint8_t {
    approach,         // move CU between qubit sites; operands (from, to)
    one_qubit_gate,   // operands (qubit, gate_id)
    restore_one_qubit,
    control_encode,   // operand (qubit)
    restore_control,
    target_gate,      // operands (qubit, gate_id)
    restore_target,
    absorb,           // operand (ss_index)
    emit,             // operand (ss_index)
    label_compute,    // operands (level b, comparator steps)
    stabilize,        // one global lone-1 reset pulse
    erase,            // operand (qubit); a particular one-qubit gate
};

const char* instr_kind_name(instr_kind k);

struct pulse_instruction {
    instr_kind kind;
    int32_t a = 0;
    int32_t b = 0;

    static pulse_instruction make_approach(int from_qubit, int to_qubit);
    static pulse_instruction make_one_qubit(int qubit, int gate_id);
    static pulse_instruction make_restore(instr_kind restore_kind);
    static pulse_instruction make_control_encode(int qubit);
    static pulse_instruction make_target(int qubit, int gate_id);
    static pulse_instruction make_absorb(int ss_index);
    static pulse_instruction make_emit(int ss_index);
    static pulse_instruction make_label_compute(int level, int steps);
    static pulse_instruction make_stabilize();
    static pulse_instruction make_erase(int qubit);
};

int instruction_cost(const pulse_instruction& instr, const cost_model& model);

struct pulse_program {
    std::vector<pulse_instruction> instructions;

    void append(const pulse_instruction& instr) { instructions.push_back(instr); }
    void append(const pulse_program& other);

    int64_t total_pulses(const cost_model& model) const;
    void write_text(std::ostream& os) const;
};

} // namespace gcq
