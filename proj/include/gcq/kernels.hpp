// Amplitude-array kernels behind the state-vector engine.
//
// Every kernel exists as a scalar reference implementation and, on x86-64
// with AVX2, as a vectorized variant; the active table is chosen once at
// startup. Set GCQ_KERNELS=scalar (or avx2) to force a table. The two
// variants are equivalence-tested against each other on random states.
//
// Index conventions: amplitude index i encodes qubit k in bit k of i.
// A "masked" kernel touches only indices with (i & mask) == val; mask/val
// describe control qubits (val bits may be 0 for negative polarity).
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

namespace gcq::kernels {

using cplx = std::complex<double>;

struct ops {
    const char* name;

    // amps[pair] = u * amps[pair] on every pair (i, i | 1<<target) with
    // (i & cmask) == cval and target bit of i clear. u is row-major 2x2.
    void (*unitary2)(cplx* amps, unsigned n_qubits, unsigned target, uint64_t cmask,
                     uint64_t cval, const cplx* u);

    // Swap the two halves of every selected pair (an X on `target` under
    // the control mask).
    void (*pauli_x)(cplx* amps, unsigned n_qubits, unsigned target, uint64_t cmask,
                    uint64_t cval);

    // amps[i] *= factor wherever (i & mask) == val.
    void (*phase)(cplx* amps, unsigned n_qubits, uint64_t mask, uint64_t val, cplx factor);

    double (*norm_sq)(const cplx* amps, size_t len);

    // Sum of |amps[i]|^2 over (i & mask) == val.
    double (*masked_prob)(const cplx* amps, unsigned n_qubits, uint64_t mask, uint64_t val);

    // <x|y> = sum conj(x[i]) * y[i].
    cplx (*inner)(const cplx* x, const cplx* y, size_t len);

    void (*scale)(cplx* amps, size_t len, double factor);

    // Project qubit `target` onto `outcome`, move the surviving branch into
    // the target=0 subspace and multiply it by inv_norm (erase-to-ground).
    void (*reset_qubit)(cplx* amps, unsigned n_qubits, unsigned target, int outcome,
                        double inv_norm);
};

const ops& scalar_ops();

// nullptr when the CPU (or build) lacks AVX2.
const ops* avx2_ops();

const ops& active_ops();

} // namespace gcq::kernels
