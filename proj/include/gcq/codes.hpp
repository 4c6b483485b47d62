// Steane [[7,1,3]] and Shor [[9,1,3]] block circuits: encoders, coherent
// (measurement-free) error correction with ancilla erasure/reuse, and the
// environment-branch correction experiment.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcq/circuit.hpp"
#include "gcq/state_vector.hpp"

namespace gcq {

// Tensor product of single-qubit Paulis: X on x_mask bits, Z on z_mask bits
// (overlap = Y up to phase).
struct pauli_string {
    uint64_t x_mask = 0;
    uint64_t z_mask = 0;

    bool commutes_with(const pauli_string& other) const;
    bool operator==(const pauli_string&) const = default;
};

struct code_spec {
    std::string name;
    unsigned n_data = 0;
    unsigned n_ancilla = 0;
    std::vector<pauli_string> stabilizers; // generators over the data wires
    pauli_string logical_x;
    pauli_string logical_z;

    unsigned block_size_qubits() const { return n_data + n_ancilla; }

    void validate() const; // commutation relations, block size

    static const code_spec& steane();
    static const code_spec& shor();
    static const code_spec& by_name(const std::string& name);
};

// Encoders map |psi> on wire 0 (all other wires |0>) to the codeword on the
// data wires; ancilla wires are untouched.
circuit steane_encode();
circuit shor_encode();

// Full EC pass over one block. Steane: bit-flip syndrome -> 7 conditional
// X corrections -> erase, then the H-conjugated pass for phase flips.
// Shor: phase section first (2 ancillas), then per-triple bit sections.
// No syndrome is measured; corrections are ancilla-controlled unitaries and
// erasure is the only non-unitary element.
circuit steane_ec();
circuit shor_ec();

circuit encode_circuit(const code_spec& code);
circuit ec_circuit(const code_spec& code);

// |psi>_L over a full block (ancillas |0>): prepares alpha|0>+beta|1> on
// wire 0, then runs the encoder.
state_vector encode_logical(const code_spec& code, cplx alpha, cplx beta, uint64_t seed = 0);

struct ec_experiment_report {
    double data_fidelity = 0.0;        // <Q_P| rho_data |Q_P> after correction
    double second_schmidt_value = 0.0; // across data | (ancilla + environment)
    bool factorized = false;           // Schmidt rank 1 at the requested tol
    bool ancilla_reset = false;        // all ancillas exactly |0> after erasure
    double data_fidelity_after_erase = 0.0;
    bool factorized_after_erase = false;
};

// Builds |Q_P>|E_0> + dx X_q|Q_X>|E_1> + dy Y_q|Q_Y>|E_2> + dz Z_q|Q_Z>|E_3>
// over block + 2 environment qubits, runs EC, and checks that the data
// register factors out in the original state.
ec_experiment_report coherent_ec_experiment(const code_spec& code, cplx delta_x, cplx delta_y,
                                            cplx delta_z, unsigned error_qubit,
                                            double product_tol = 1e-8, uint64_t seed = 1);

// Fidelity of the data register against a reference codeword |ref> (defined
// on the low `n_data` wires): <ref| rho_data |ref>.
double data_register_fidelity(const state_vector& full, const state_vector& reference_block,
                              unsigned n_data);

} // namespace gcq
