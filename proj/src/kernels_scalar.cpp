// Scalar reference implementations of the amplitude kernels.
#include "gcq/kernels.hpp"

#include <utility>

#include "kernels_iter.hpp"

namespace gcq::kernels {

namespace {

void unitary2_scalar(cplx* amps, unsigned n, unsigned target, uint64_t cmask, uint64_t cval,
                     const cplx* u)
{
    const uint64_t tbit = 1ull << target;
    detail::for_each_fixed(n, cmask | tbit, cval, [&](uint64_t i) {
        const cplx x0 = amps[i];
        const cplx x1 = amps[i | tbit];
        amps[i] = u[0] * x0 + u[1] * x1;
        amps[i | tbit] = u[2] * x0 + u[3] * x1;
    });
}

void pauli_x_scalar(cplx* amps, unsigned n, unsigned target, uint64_t cmask, uint64_t cval)
{
    const uint64_t tbit = 1ull << target;
    detail::for_each_fixed(n, cmask | tbit, cval,
                           [&](uint64_t i) { std::swap(amps[i], amps[i | tbit]); });
}

void phase_scalar(cplx* amps, unsigned n, uint64_t mask, uint64_t val, cplx factor)
{
    if (mask == 0) {
        const uint64_t dim = 1ull << n;
        for (uint64_t i = 0; i < dim; i++)
            amps[i] *= factor;
        return;
    }
    detail::for_each_fixed(n, mask, val, [&](uint64_t i) { amps[i] *= factor; });
}

double norm_sq_scalar(const cplx* amps, size_t len)
{
    double acc = 0.0;
    for (size_t i = 0; i < len; i++)
        acc += amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    return acc;
}

double masked_prob_scalar(const cplx* amps, unsigned n, uint64_t mask, uint64_t val)
{
    if (mask == 0)
        return norm_sq_scalar(amps, 1ull << n);
    double acc = 0.0;
    detail::for_each_fixed(n, mask, val, [&](uint64_t i) {
        acc += amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    });
    return acc;
}

cplx inner_scalar(const cplx* x, const cplx* y, size_t len)
{
    double re = 0.0, im = 0.0;
    for (size_t i = 0; i < len; i++) {
        // conj(x) * y accumulated in parts to stay out of std::complex
        // operator overhead.
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

void scale_scalar(cplx* amps, size_t len, double factor)
{
    for (size_t i = 0; i < len; i++)
        amps[i] *= factor;
}

void reset_qubit_scalar(cplx* amps, unsigned n, unsigned target, int outcome, double inv_norm)
{
    const uint64_t tbit = 1ull << target;
    detail::for_each_fixed(n, tbit, 0, [&](uint64_t i) {
        amps[i] = (outcome ? amps[i | tbit] : amps[i]) * inv_norm;
        amps[i | tbit] = 0.0;
    });
}

} // namespace

const ops& scalar_ops()
{
    static const ops table = {
        "scalar",        unitary2_scalar, pauli_x_scalar, phase_scalar,
        norm_sq_scalar,  masked_prob_scalar, inner_scalar, scale_scalar,
        reset_qubit_scalar,
    };
    return table;
}

} // namespace gcq::kernels
