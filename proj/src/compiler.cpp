#include "gcq/compiler.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace gcq {

namespace {

std::vector<int> control_wires(const gate& g)
{
    std::vector<int> out;
    for (uint32_t m = g.ctrl_mask; m != 0; m &= m - 1)
        out.push_back(std::countr_zero(m));
    return out;
}

// Controls are visited farthest-from-target first (in chain slots), so the
// walk sweeps through the control set on the way in and unwinds on the way
// out.
std::vector<int> control_visit_order(const gate& g, const circuit& c)
{
    std::vector<int> order = control_wires(g);
    int t = static_cast<int>(c.chain_position(g.target));
    std::sort(order.begin(), order.end(), [t, &c](int a, int b) {
        int da = std::abs(static_cast<int>(c.chain_position(a)) - t);
        int db = std::abs(static_cast<int>(c.chain_position(b)) - t);
        return da != db ? da > db : a < b;
    });
    return order;
}

int entry_site(const circuit_op& op, const circuit& c)
{
    if (op.is_erase || !op.g.has_controls())
        return static_cast<int>(c.chain_position(op.g.target));
    return static_cast<int>(c.chain_position(control_visit_order(op.g, c).front()));
}

struct lowering {
    const cost_model& model;
    const circuit& circ;
    pulse_program program;
    std::vector<gate_cost_entry> breakdown;
    std::vector<int> cu_path;
    int pos; // chain slot
    int64_t total = 0;
    int64_t current = 0; // pulses accumulated for the entry being built

    lowering(const cost_model& m, const circuit& c, int start) : model(m), circ(c), pos(start)
    {
        cu_path.push_back(start);
    }

    void emit(const pulse_instruction& instr)
    {
        program.append(instr);
        int64_t cost = instruction_cost(instr, model);
        total += cost;
        current += cost;
    }

    void move_to_wire(unsigned wire)
    {
        int site = static_cast<int>(circ.chain_position(wire));
        if (site == pos)
            return;
        emit(pulse_instruction::make_approach(pos, site));
        pos = site;
        cu_path.push_back(site);
    }

    void flush(size_t op_index, std::string label)
    {
        if (current == 0)
            return;
        breakdown.push_back({op_index, std::move(label), current});
        current = 0;
    }
};

int gate_id(const gate& g)
{
    return static_cast<int>(g.kind);
}

// Inter-block distance expressed in qubit-index steps (cells rounded up).
int64_t block_hop_steps(int blocks, const chain_layout& layout)
{
    int64_t cells = static_cast<int64_t>(blocks) * layout.block_stride_cells();
    return (cells + layout.cells_per_qubit - 1) / layout.cells_per_qubit;
}

// Approach pulses over a raw cell distance, rounded once at pulse
// granularity so long hauls stay affine in the distance.
int64_t approach_pulses_over_cells(int64_t cells, const chain_layout& layout,
                                   const cost_model& model)
{
    int64_t scaled = model.approach_pulses_per_step * cells;
    int64_t travel = (scaled + layout.cells_per_qubit - 1) / layout.cells_per_qubit;
    return travel + model.approach_pulses_per_step * model.approach_step_offset;
}

} // namespace

compile_result compile(const circuit& c, const chain_layout& layout, const cost_model& model,
                       std::optional<int> cu_start)
{
    model.validate();
    for (const auto& op : c.ops()) {
        if (static_cast<int>(op.g.target) >= layout.block_size_qubits ||
            (op.g.ctrl_mask >> layout.block_size_qubits) != 0)
            throw std::out_of_range("compile: circuit wire outside the block");
    }

    compile_result result;
    if (c.ops().empty()) {
        if (cu_start)
            result.cu_path.push_back(*cu_start);
        return result;
    }

    const auto& ops = c.ops();
    lowering lw(model, c, cu_start.value_or(entry_site(ops.front(), c)));

    for (size_t i = 0; i < ops.size();) {
        const auto& op = ops[i];

        if (op.is_erase) {
            lw.move_to_wire(op.g.target);
            lw.emit(pulse_instruction::make_erase(op.g.target));
            lw.flush(i, "ERASE");
            i++;
            continue;
        }
        if (!op.g.has_controls()) {
            lw.move_to_wire(op.g.target);
            lw.emit(pulse_instruction::make_one_qubit(op.g.target, gate_id(op.g)));
            lw.emit(pulse_instruction::make_restore(instr_kind::restore_one_qubit));
            lw.flush(i, op.g.name());
            i++;
            continue;
        }

        // Controlled run: consecutive gates sharing the exact control
        // pattern keep the CU in its encoded form and move target to target.
        size_t run_end = i + 1;
        while (run_end < ops.size() && !ops[run_end].is_erase &&
               ops[run_end].g.ctrl_mask == op.g.ctrl_mask &&
               ops[run_end].g.ctrl_val == op.g.ctrl_val)
            run_end++;

        std::vector<int> order = control_visit_order(op.g, c);
        for (int cwire : order) {
            lw.move_to_wire(cwire);
            lw.emit(pulse_instruction::make_control_encode(cwire));
        }
        lw.flush(i, op.g.name() + ":encode");
        for (size_t j = i; j < run_end; j++) {
            lw.move_to_wire(ops[j].g.target);
            lw.emit(pulse_instruction::make_target(ops[j].g.target, gate_id(ops[j].g)));
            lw.emit(pulse_instruction::make_restore(instr_kind::restore_target));
            lw.flush(j, ops[j].g.name());
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            lw.move_to_wire(*it);
            lw.emit(pulse_instruction::make_restore(instr_kind::restore_control));
        }
        lw.flush(run_end - 1, op.g.name() + ":restore");
        i = run_end;
    }

    result.program = std::move(lw.program);
    result.total_pulses = lw.total;
    result.breakdown = std::move(lw.breakdown);
    result.cu_path = std::move(lw.cu_path);
    result.trailing_return_pulses =
        lw.pos == layout.block_size_qubits - 1
            ? 0
            : model.approach_cost(layout.block_size_qubits - 1 - lw.pos);
    return result;
}

code_compile_report compile_code(const code_spec& code, const cost_model& model)
{
    chain_layout layout(code.block_size_qubits());
    code_compile_report report;
    report.encode = compile(encode_circuit(code), layout, model);
    report.ec = compile(ec_circuit(code), layout, model);
    report.row = {code.name, report.encode.total_pulses, report.ec.total_pulses,
                  report.encode.total_pulses + report.ec.total_pulses};
    return report;
}

std::vector<code_pulse_row> compile_code_tables(const cost_model& model)
{
    return {compile_code(code_spec::steane(), model).row,
            compile_code(code_spec::shor(), model).row};
}

int64_t ec_cycle_pulses(const code_spec& code, const chain_layout& layout,
                        const cost_model& model)
{
    if (layout.block_size_qubits != static_cast<int>(code.block_size_qubits()))
        throw std::invalid_argument("ec_cycle_pulses: layout block size does not fit the code");
    // Every block's CU is driven by the same global pulses, so one block's
    // program is the whole device's program.
    chain_layout one_block = layout;
    one_block.num_blocks = 1;
    return compile(ec_circuit(code), one_block, model).total_pulses;
}

int64_t serialized_ec_pulses(const code_spec& code, const chain_layout& layout,
                             const cost_model& model)
{
    int64_t per_block = ec_cycle_pulses(code, layout, model);
    int64_t hop = model.approach_cost(static_cast<int>(block_hop_steps(1, layout)));
    return layout.num_blocks * per_block + (layout.num_blocks - 1) * hop;
}

int64_t algorithm_phase_gate_cost(int block_a, int block_b, const chain_layout& layout,
                                  const cost_model& model)
{
    if (block_a < 0 || block_b < 0 || block_a >= layout.num_blocks ||
        block_b >= layout.num_blocks)
        throw std::out_of_range("algorithm_phase_gate_cost: block index out of range");
    if (block_a == block_b) {
        // Degenerate case: an ordinary intra-block two-qubit gate.
        circuit c(layout.block_size_qubits, 0);
        c.add(gate::cnot(0, 1));
        return compile(c, layout, model).total_pulses;
    }
    int64_t cells = std::abs(block_b - block_a) * layout.block_stride_cells();
    int64_t approach = approach_pulses_over_cells(cells, layout, model);
    return model.control_interact_pulses + approach + model.target_op_pulses +
           model.target_restore_pulses + approach + model.control_interact_pulses;
}

std::vector<int64_t> swap_chain_schedule(int block_distance, const chain_layout& layout,
                                         const cost_model& model)
{
    if (block_distance < 1)
        throw std::invalid_argument("swap_chain_schedule: distance must be >= 1");
    // One adjacent-block swap (three CNOTs) per EC cycle.
    int64_t adjacent = algorithm_phase_gate_cost(0, 1, layout, model);
    return std::vector<int64_t>(block_distance, 3 * adjacent);
}

} // namespace gcq
