// Gate alphabet for block circuits: Paulis, H, S, and multi-controlled
// X/Z with per-control polarity (0-controls fire on |0>).
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gcq {

enum class gate_kind : uint8_t { x, y, z, h, s, cnot, cz, mcx, mcz };

enum class pauli : uint8_t { x, y, z };

struct gate {
    gate_kind kind;
    unsigned target = 0;
    uint32_t ctrl_mask = 0; // bit set => that qubit is a control
    uint32_t ctrl_val = 0;  // required control values (subset of ctrl_mask)

    unsigned num_controls() const;
    bool has_controls() const { return ctrl_mask != 0; }

    static gate x(unsigned q) { return {gate_kind::x, q}; }
    static gate y(unsigned q) { return {gate_kind::y, q}; }
    static gate z(unsigned q) { return {gate_kind::z, q}; }
    static gate h(unsigned q) { return {gate_kind::h, q}; }
    static gate s(unsigned q) { return {gate_kind::s, q}; }
    static gate cnot(unsigned control, unsigned target);
    static gate cz(unsigned control, unsigned target);
    // controls: (qubit, polarity) pairs; polarity true fires on |1>.
    static gate mcx(const std::vector<std::pair<unsigned, bool>>& controls, unsigned target);
    static gate mcz(const std::vector<std::pair<unsigned, bool>>& controls, unsigned target);
    static gate from_pauli(pauli p, unsigned q);

    std::string name() const;
    bool operator==(const gate&) const = default;
};

const char* gate_kind_name(gate_kind k);

} // namespace gcq
