// Block circuits: an ordered gate list over data + ancilla wires, plus
// erasure ops. Wire w of a block is qubit w of the simulated state; wire
// order matches chain order within the block.
#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "gcq/gates.hpp"
#include "gcq/state_vector.hpp"

namespace gcq {

struct circuit_op {
    bool is_erase = false;
    gate g; // for erases only g.target is meaningful

    static circuit_op from_gate(const gate& gg) { return {false, gg}; }
    static circuit_op erase(unsigned wire) { return {true, gate::x(wire)}; }
    bool operator==(const circuit_op&) const = default;
};

class circuit {
public:
    circuit(unsigned n_data, unsigned n_ancilla);

    unsigned n_data() const { return n_data_; }
    unsigned n_ancilla() const { return n_ancilla_; }
    unsigned n_wires() const { return n_data_ + n_ancilla_; }
    bool is_ancilla(unsigned wire) const { return wire >= n_data_ && wire < n_wires(); }

    const std::vector<circuit_op>& ops() const { return ops_; }
    size_t size() const { return ops_.size(); }

    void add(const gate& g);
    void add_erase(unsigned wire); // only ancilla wires may be erased
    void append(const circuit& other);

    // The target state may carry extra registers above n_wires().
    void apply_to(state_vector& s) const;

    // Reversed circuit with every gate inverted; throws if erases present.
    circuit inverse() const;

    // Largest number of ancilla wires simultaneously "in use" (touched since
    // their last erase).
    unsigned peak_ancilla_usage() const;

    // Chain slot of each wire within the block (a permutation of the wire
    // indices; identity unless the block stores ancillas away from the data
    // end). The compiler measures CU travel in chain slots.
    unsigned chain_position(unsigned wire) const { return chain_positions_[wire]; }
    const std::vector<unsigned>& chain_positions() const { return chain_positions_; }
    void set_chain_positions(std::vector<unsigned> positions);

    // Line format: "NAME target [controls...] [polarities...]" / "ERASE w".
    void write_text(std::ostream& os) const;
    static circuit read_text(std::istream& is, unsigned n_data, unsigned n_ancilla);

    bool operator==(const circuit&) const = default;

private:
    void check_wire(unsigned wire) const;

    unsigned n_data_;
    unsigned n_ancilla_;
    std::vector<circuit_op> ops_;
    std::vector<unsigned> chain_positions_;
};

} // namespace gcq
