#include "gcq/circuit.hpp"

#include <bit>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gcq {

circuit::circuit(unsigned n_data, unsigned n_ancilla) : n_data_(n_data), n_ancilla_(n_ancilla)
{
    if (n_wires() == 0 || n_wires() > k_max_qubits)
        throw std::invalid_argument("circuit: wire count out of range");
    chain_positions_.resize(n_wires());
    for (unsigned w = 0; w < n_wires(); w++)
        chain_positions_[w] = w;
}

void circuit::set_chain_positions(std::vector<unsigned> positions)
{
    if (positions.size() != n_wires())
        throw std::invalid_argument("set_chain_positions: wrong length");
    std::vector<bool> seen(n_wires(), false);
    for (unsigned p : positions) {
        if (p >= n_wires() || seen[p])
            throw std::invalid_argument("set_chain_positions: not a permutation of the wires");
        seen[p] = true;
    }
    chain_positions_ = std::move(positions);
}

void circuit::check_wire(unsigned wire) const
{
    if (wire >= n_wires())
        throw std::out_of_range("circuit: wire out of range");
}

void circuit::add(const gate& g)
{
    check_wire(g.target);
    for (uint32_t m = g.ctrl_mask; m != 0; m &= m - 1)
        check_wire(static_cast<unsigned>(std::countr_zero(m)));
    ops_.push_back(circuit_op::from_gate(g));
}

void circuit::add_erase(unsigned wire)
{
    check_wire(wire);
    if (!is_ancilla(wire))
        throw std::invalid_argument("circuit: only ancilla wires may be erased");
    ops_.push_back(circuit_op::erase(wire));
}

void circuit::append(const circuit& other)
{
    if (other.n_wires() > n_wires())
        throw std::invalid_argument("circuit::append: wire count mismatch");
    for (const auto& op : other.ops_)
        ops_.push_back(op);
}

void circuit::apply_to(state_vector& s) const
{
    if (s.num_qubits() < n_wires())
        throw std::invalid_argument("circuit: state has fewer qubits than circuit wires");
    for (const auto& op : ops_) {
        if (op.is_erase)
            s.erase(op.g.target);
        else
            s.apply(op.g);
    }
}

circuit circuit::inverse() const
{
    circuit inv(n_data_, n_ancilla_);
    inv.chain_positions_ = chain_positions_;
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
        if (it->is_erase)
            throw std::invalid_argument("circuit::inverse: erasure is not invertible");
        if (it->g.kind == gate_kind::s) {
            // S^-1 = S^3
            inv.add(it->g);
            inv.add(it->g);
            inv.add(it->g);
        } else {
            inv.add(it->g); // the rest of the alphabet is involutive
        }
    }
    return inv;
}

unsigned circuit::peak_ancilla_usage() const
{
    std::vector<bool> in_use(n_wires(), false);
    unsigned active = 0, peak = 0;
    auto touch = [&](unsigned w) {
        if (is_ancilla(w) && !in_use[w]) {
            in_use[w] = true;
            active++;
        }
    };
    for (const auto& op : ops_) {
        if (op.is_erase) {
            if (in_use[op.g.target]) {
                in_use[op.g.target] = false;
                active--;
            }
            continue;
        }
        touch(op.g.target);
        for (uint32_t m = op.g.ctrl_mask; m != 0; m &= m - 1)
            touch(static_cast<unsigned>(std::countr_zero(m)));
        peak = std::max(peak, active);
    }
    return peak;
}

void circuit::write_text(std::ostream& os) const
{
    for (const auto& op : ops_) {
        if (op.is_erase) {
            os << "ERASE " << op.g.target << '\n';
            continue;
        }
        os << op.g.name() << ' ' << op.g.target;
        std::vector<unsigned> ctrls;
        for (uint32_t m = op.g.ctrl_mask; m != 0; m &= m - 1)
            ctrls.push_back(static_cast<unsigned>(std::countr_zero(m)));
        for (unsigned c : ctrls)
            os << ' ' << c;
        for (unsigned c : ctrls)
            os << ' ' << ((op.g.ctrl_val >> c) & 1);
        os << '\n';
    }
}

circuit circuit::read_text(std::istream& is, unsigned n_data, unsigned n_ancilla)
{
    static const std::map<std::string, gate_kind> kinds = {
        {"X", gate_kind::x},       {"Y", gate_kind::y},   {"Z", gate_kind::z},
        {"H", gate_kind::h},       {"S", gate_kind::s},   {"CNOT", gate_kind::cnot},
        {"CZ", gate_kind::cz},     {"MCX", gate_kind::mcx}, {"MCZ", gate_kind::mcz},
    };

    circuit c(n_data, n_ancilla);
    std::string line;
    size_t line_no = 0;
    while (std::getline(is, line)) {
        line_no++;
        if (size_t hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream ls(line);
        std::string name;
        if (!(ls >> name))
            continue;

        auto fail = [&](const char* why) {
            throw std::invalid_argument("circuit line " + std::to_string(line_no) + ": " + why);
        };

        unsigned target = 0;
        if (!(ls >> target))
            fail("missing target wire");

        if (name == "ERASE") {
            c.add_erase(target);
            continue;
        }
        auto it = kinds.find(name);
        if (it == kinds.end())
            fail("unknown gate");

        std::vector<unsigned> rest;
        for (unsigned v = 0; ls >> v;)
            rest.push_back(v);
        if (rest.size() % 2 != 0)
            fail("controls and polarities must pair up");

        size_t k = rest.size() / 2;
        std::vector<std::pair<unsigned, bool>> ctrls;
        for (size_t j = 0; j < k; j++)
            ctrls.emplace_back(rest[j], rest[k + j] != 0);

        bool needs_controls = it->second == gate_kind::cnot || it->second == gate_kind::cz ||
                              it->second == gate_kind::mcx || it->second == gate_kind::mcz;
        if (needs_controls && ctrls.empty())
            fail("controlled gate without controls");

        gate g{it->second, target, 0, 0};
        if (!ctrls.empty()) {
            g = (it->second == gate_kind::mcz || it->second == gate_kind::cz)
                    ? gate::mcz(ctrls, target)
                    : gate::mcx(ctrls, target);
            g.kind = it->second;
        }
        c.add(g);
    }
    return c;
}

} // namespace gcq
