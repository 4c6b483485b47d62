#include "gcq/pulses.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace gcq {

void cost_model::validate() const
{
    if (one_qubit_op_pulses < 0 || one_qubit_restore_pulses < 0 || control_interact_pulses < 0 ||
        target_op_pulses < 0 || target_restore_pulses < 0 || absorb_pulses < 0 || emit_pulses < 0)
        throw std::invalid_argument("cost_model: negative pulse count");
    if (approach_pulses_per_step < 1)
        throw std::invalid_argument("cost_model: approach_pulses_per_step must be positive");
    if (approach_step_offset < 0)
        throw std::invalid_argument("cost_model: approach_step_offset must be >= 0");
    if (emit_pulses != absorb_pulses)
        throw std::invalid_argument("cost_model: emission must cost the same as absorption");
}

int cost_model::approach_cost(int distance) const
{
    if (distance < 0)
        distance = -distance;
    return approach_pulses_per_step * (distance + approach_step_offset);
}

cost_model cost_model::from_config(const config& cfg)
{
    return from_config(cfg, cost_model{});
}

cost_model cost_model::from_config(const config& cfg, const cost_model& defaults)
{
    cost_model m = defaults;
    auto geti = [&cfg](const char* key, int fallback) {
        return static_cast<int>(cfg.get_int(key, fallback));
    };
    m.one_qubit_op_pulses = geti("cost.one_qubit_op_pulses", m.one_qubit_op_pulses);
    m.one_qubit_restore_pulses = geti("cost.one_qubit_restore_pulses", m.one_qubit_restore_pulses);
    m.control_interact_pulses = geti("cost.control_interact_pulses", m.control_interact_pulses);
    m.target_op_pulses = geti("cost.target_op_pulses", m.target_op_pulses);
    m.target_restore_pulses = geti("cost.target_restore_pulses", m.target_restore_pulses);
    m.approach_pulses_per_step = geti("cost.approach_pulses_per_step", m.approach_pulses_per_step);
    m.approach_step_offset = geti("cost.approach_step_offset", m.approach_step_offset);
    m.absorb_pulses = geti("cost.absorb_pulses", m.absorb_pulses);
    // The emission program is the absorption program run in reverse.
    m.emit_pulses = geti("cost.emit_pulses", m.absorb_pulses);
    m.validate();
    return m;
}

const char* instr_kind_name(instr_kind k)
{
    switch (k) {
    case instr_kind::approach: return "APPROACH";
    case instr_kind::one_qubit_gate: return "OP1";
    case instr_kind::restore_one_qubit: return "RESTORE1";
    case instr_kind::control_encode: return "CTRL_ENCODE";
    case instr_kind::restore_control: return "CTRL_RESTORE";
    case instr_kind::target_gate: return "TARGET_OP";
    case instr_kind::restore_target: return "TARGET_RESTORE";
    case instr_kind::absorb: return "ABSORB";
    case instr_kind::emit: return "EMIT";
    case instr_kind::label_compute: return "LABEL_COMPUTE";
    case instr_kind::stabilize: return "STABILIZE";
    case instr_kind::erase: return "ERASE";
    }
    return "?";
}

pulse_instruction pulse_instruction::make_approach(int from_qubit, int to_qubit)
{
    return {instr_kind::approach, from_qubit, to_qubit};
}
pulse_instruction pulse_instruction::make_one_qubit(int qubit, int gate_id)
{
    return {instr_kind::one_qubit_gate, qubit, gate_id};
}
pulse_instruction pulse_instruction::make_restore(instr_kind restore_kind)
{
    if (restore_kind != instr_kind::restore_one_qubit &&
        restore_kind != instr_kind::restore_control &&
        restore_kind != instr_kind::restore_target)
        throw std::invalid_argument("make_restore: not a restore kind");
    return {restore_kind, 0, 0};
}
pulse_instruction pulse_instruction::make_control_encode(int qubit)
{
    return {instr_kind::control_encode, qubit, 0};
}
pulse_instruction pulse_instruction::make_target(int qubit, int gate_id)
{
    return {instr_kind::target_gate, qubit, gate_id};
}
pulse_instruction pulse_instruction::make_absorb(int ss_index)
{
    return {instr_kind::absorb, ss_index, 0};
}
pulse_instruction pulse_instruction::make_emit(int ss_index)
{
    return {instr_kind::emit, ss_index, 0};
}
pulse_instruction pulse_instruction::make_label_compute(int level, int steps)
{
    if (steps < 0)
        throw std::invalid_argument("label_compute: negative step count");
    return {instr_kind::label_compute, level, steps};
}
pulse_instruction pulse_instruction::make_stabilize()
{
    return {instr_kind::stabilize, 0, 0};
}
pulse_instruction pulse_instruction::make_erase(int qubit)
{
    return {instr_kind::erase, qubit, 0};
}

int instruction_cost(const pulse_instruction& instr, const cost_model& model)
{
    switch (instr.kind) {
    case instr_kind::approach:
        return model.approach_cost(std::abs(instr.a - instr.b));
    case instr_kind::one_qubit_gate:
        return model.one_qubit_op_pulses;
    case instr_kind::restore_one_qubit:
        return model.one_qubit_restore_pulses;
    case instr_kind::control_encode:
    case instr_kind::restore_control:
        return model.control_interact_pulses;
    case instr_kind::target_gate:
        return model.target_op_pulses;
    case instr_kind::restore_target:
        return model.target_restore_pulses;
    case instr_kind::absorb:
        return model.absorb_pulses;
    case instr_kind::emit:
        return model.emit_pulses;
    case instr_kind::label_compute:
        // Each comparator step is executed as a one-qubit-scale operation.
        return instr.b * model.one_qubit_total();
    case instr_kind::stabilize:
        return 1;
    case instr_kind::erase:
        return model.one_qubit_total();
    }
    throw std::invalid_argument("instruction_cost: unknown instruction kind");
}

void pulse_program::append(const pulse_program& other)
{
    instructions.insert(instructions.end(), other.instructions.begin(),
                        other.instructions.end());
}

int64_t pulse_program::total_pulses(const cost_model& model) const
{
    int64_t total = 0;
    for (const auto& instr : instructions)
        total += instruction_cost(instr, model);
    return total;
}

void pulse_program::write_text(std::ostream& os) const
{
    for (const auto& instr : instructions)
        os << instr_kind_name(instr.kind) << ' ' << instr.a << ' ' << instr.b << '\n';
}

} // namespace gcq
