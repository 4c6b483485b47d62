#include "gcq/gates.hpp"

#include <bit>
#include <stdexcept>

namespace gcq {

unsigned gate::num_controls() const
{
    return static_cast<unsigned>(std::popcount(ctrl_mask));
}

gate gate::cnot(unsigned control, unsigned target)
{
    if (control == target)
        throw std::invalid_argument("cnot: control equals target");
    return {gate_kind::cnot, target, 1u << control, 1u << control};
}

gate gate::cz(unsigned control, unsigned target)
{
    if (control == target)
        throw std::invalid_argument("cz: control equals target");
    return {gate_kind::cz, target, 1u << control, 1u << control};
}

namespace {

gate make_multi(gate_kind kind, const std::vector<std::pair<unsigned, bool>>& controls,
                unsigned target)
{
    gate g{kind, target, 0, 0};
    for (auto [q, polarity] : controls) {
        uint32_t bit = 1u << q;
        if (g.ctrl_mask & bit)
            throw std::invalid_argument("multi-controlled gate: duplicate control");
        g.ctrl_mask |= bit;
        if (polarity)
            g.ctrl_val |= bit;
    }
    if (g.ctrl_mask & (1u << target))
        throw std::invalid_argument("multi-controlled gate: target overlaps controls");
    return g;
}

} // namespace

gate gate::mcx(const std::vector<std::pair<unsigned, bool>>& controls, unsigned target)
{
    return make_multi(gate_kind::mcx, controls, target);
}

gate gate::mcz(const std::vector<std::pair<unsigned, bool>>& controls, unsigned target)
{
    return make_multi(gate_kind::mcz, controls, target);
}

gate gate::from_pauli(pauli p, unsigned q)
{
    switch (p) {
    case pauli::x: return gate::x(q);
    case pauli::y: return gate::y(q);
    case pauli::z: return gate::z(q);
    }
    throw std::invalid_argument("from_pauli: bad pauli");
}

const char* gate_kind_name(gate_kind k)
{
    switch (k) {
    case gate_kind::x: return "X";
    case gate_kind::y: return "Y";
    case gate_kind::z: return "Z";
    case gate_kind::h: return "H";
    case gate_kind::s: return "S";
    case gate_kind::cnot: return "CNOT";
    case gate_kind::cz: return "CZ";
    case gate_kind::mcx: return "MCX";
    case gate_kind::mcz: return "MCZ";
    }
    return "?";
}

std::string gate::name() const
{
    return gate_kind_name(kind);
}

} // namespace gcq
