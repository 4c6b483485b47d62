// Dense pure-state simulator for one block (plus optional extra registers).
#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

#include "gcq/gates.hpp"
#include "gcq/kernels.hpp"

namespace gcq {

using cplx = std::complex<double>;

constexpr unsigned k_max_qubits = 24;

// Amplitudes over 2^n basis states; qubit k lives in bit k of the index.
// Owns a seedable RNG used for erasure/measurement outcomes. Mutating
// operations act in place; one owner at a time.
class state_vector {
public:
    explicit state_vector(unsigned n_qubits, uint64_t seed = 0);
    state_vector(std::vector<cplx> amplitudes, uint64_t seed = 0);

    unsigned num_qubits() const { return n_; }
    uint64_t dim() const { return uint64_t{1} << n_; }

    std::span<const cplx> amplitudes() const { return {amps_.data(), amps_.size()}; }
    std::span<cplx> mutable_amplitudes() { return {amps_.data(), amps_.size()}; }
    cplx amplitude(uint64_t index) const { return amps_.at(index); }

    void apply(const gate& g);
    void apply_pauli(unsigned qubit, pauli p);
    // X on every bit of x_mask and Z on every bit of z_mask (Y as ZX up to
    // global phase).
    void apply_pauli_string(uint64_t x_mask, uint64_t z_mask);

    // Erase-to-ground: sample the qubit in the computational basis, then
    // reset it to |0>. Returns the sampled branch.
    int erase(unsigned qubit);
    // Deterministic variant for oracle tests: forces the branch (throws on a
    // zero-probability branch).
    int erase_forced(unsigned qubit, int outcome);

    // Projective measurement that keeps the sampled value on the qubit.
    int measure(unsigned qubit);

    double prob_one(unsigned qubit) const;
    double norm_sq() const;
    void renormalize();

    void seed_rng(uint64_t seed) { rng_.seed(seed); }
    std::mt19937_64& rng() { return rng_; }

private:
    void check_qubit(unsigned q) const;
    void check_gate(const gate& g) const;

    unsigned n_;
    std::vector<cplx> amps_;
    std::mt19937_64 rng_;
    const kernels::ops* k_;
};

double fidelity(const state_vector& a, const state_vector& b);
cplx inner_product(const state_vector& a, const state_vector& b);

// Singular values of the bipartition split defined by partition_mask (the
// "A" side qubits), descending.
std::vector<double> schmidt_values(const state_vector& s, uint32_t partition_mask);

// True iff the Schmidt rank across the partition is 1 within tol (second
// singular value below tol).
bool is_product(const state_vector& s, uint32_t partition_mask, double tol);

// Debug dump: one "index real imag" line per amplitude.
void dump_amplitudes(const state_vector& s, std::ostream& os);

} // namespace gcq
