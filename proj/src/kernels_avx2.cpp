// AVX2 variants of the amplitude kernels. One __m256d holds two complex
// doubles laid out [re0, im0, re1, im1]. Compiled with -mavx2 -mfma; the
// dispatcher only hands this table out when the CPU supports both.
#include "gcq/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "kernels_iter.hpp"

namespace gcq::kernels {

namespace {

// x * u for a broadcast complex constant u split into u_re/u_im lane vectors.
inline __m256d cmul_const(__m256d x, __m256d u_re, __m256d u_im)
{
    __m256d x_swap = _mm256_permute_pd(x, 0x5); // [im, re, im, re]
    return _mm256_fmaddsub_pd(x, u_re, _mm256_mul_pd(x_swap, u_im));
}

void unitary2_avx2(cplx* amps, unsigned n, unsigned target, uint64_t cmask, uint64_t cval,
                   const cplx* u)
{
    double* p = reinterpret_cast<double*>(amps);
    const uint64_t tbit = 1ull << target;
    const uint64_t fixed = cmask | tbit;
    const uint64_t run = detail::run_length(fixed);

    if (run >= 2) {
        const __m256d u00r = _mm256_set1_pd(u[0].real()), u00i = _mm256_set1_pd(u[0].imag());
        const __m256d u01r = _mm256_set1_pd(u[1].real()), u01i = _mm256_set1_pd(u[1].imag());
        const __m256d u10r = _mm256_set1_pd(u[2].real()), u10i = _mm256_set1_pd(u[2].imag());
        const __m256d u11r = _mm256_set1_pd(u[3].real()), u11i = _mm256_set1_pd(u[3].imag());
        detail::for_each_run(n, fixed, cval, [&](uint64_t base) {
            for (uint64_t j = 0; j < run; j += 2) {
                double* p0 = p + 2 * (base + j);
                double* p1 = p + 2 * (base + j + tbit);
                __m256d v0 = _mm256_loadu_pd(p0);
                __m256d v1 = _mm256_loadu_pd(p1);
                __m256d y0 = _mm256_add_pd(cmul_const(v0, u00r, u00i), cmul_const(v1, u01r, u01i));
                __m256d y1 = _mm256_add_pd(cmul_const(v0, u10r, u10i), cmul_const(v1, u11r, u11i));
                _mm256_storeu_pd(p0, y0);
                _mm256_storeu_pd(p1, y1);
            }
        });
        return;
    }

    if (target == 0) {
        // Pair halves sit side by side in one vector: [x0, x1].
        const __m256d uLr = _mm256_setr_pd(u[0].real(), u[0].real(), u[2].real(), u[2].real());
        const __m256d uLi = _mm256_setr_pd(u[0].imag(), u[0].imag(), u[2].imag(), u[2].imag());
        const __m256d uHr = _mm256_setr_pd(u[1].real(), u[1].real(), u[3].real(), u[3].real());
        const __m256d uHi = _mm256_setr_pd(u[1].imag(), u[1].imag(), u[3].imag(), u[3].imag());
        detail::for_each_fixed(n, fixed, cval, [&](uint64_t i) {
            double* p0 = p + 2 * i;
            __m256d v = _mm256_loadu_pd(p0);
            __m256d lo = _mm256_permute2f128_pd(v, v, 0x00); // [x0, x0]
            __m256d hi = _mm256_permute2f128_pd(v, v, 0x11); // [x1, x1]
            _mm256_storeu_pd(p0, _mm256_add_pd(cmul_const(lo, uLr, uLi), cmul_const(hi, uHr, uHi)));
        });
        return;
    }

    // Control on qubit 0 with a higher target: strided pairs, no vector win.
    detail::for_each_fixed(n, fixed, cval, [&](uint64_t i) {
        const cplx x0 = amps[i];
        const cplx x1 = amps[i | tbit];
        amps[i] = u[0] * x0 + u[1] * x1;
        amps[i | tbit] = u[2] * x0 + u[3] * x1;
    });
}

void pauli_x_avx2(cplx* amps, unsigned n, unsigned target, uint64_t cmask, uint64_t cval)
{
    double* p = reinterpret_cast<double*>(amps);
    const uint64_t tbit = 1ull << target;
    const uint64_t fixed = cmask | tbit;
    const uint64_t run = detail::run_length(fixed);

    if (run >= 2) {
        detail::for_each_run(n, fixed, cval, [&](uint64_t base) {
            for (uint64_t j = 0; j < run; j += 2) {
                double* p0 = p + 2 * (base + j);
                double* p1 = p + 2 * (base + j + tbit);
                __m256d v0 = _mm256_loadu_pd(p0);
                __m256d v1 = _mm256_loadu_pd(p1);
                _mm256_storeu_pd(p0, v1);
                _mm256_storeu_pd(p1, v0);
            }
        });
        return;
    }

    if (target == 0) {
        detail::for_each_fixed(n, fixed, cval, [&](uint64_t i) {
            double* p0 = p + 2 * i;
            __m256d v = _mm256_loadu_pd(p0);
            _mm256_storeu_pd(p0, _mm256_permute2f128_pd(v, v, 0x01));
        });
        return;
    }

    detail::for_each_fixed(n, fixed, cval, [&](uint64_t i) { std::swap(amps[i], amps[i | tbit]); });
}

void phase_avx2(cplx* amps, unsigned n, uint64_t mask, uint64_t val, cplx factor)
{
    double* p = reinterpret_cast<double*>(amps);
    const __m256d f_re = _mm256_set1_pd(factor.real());
    const __m256d f_im = _mm256_set1_pd(factor.imag());

    if (mask == 0) {
        const uint64_t dim = 1ull << n;
        uint64_t i = 0;
        for (; i + 2 <= dim; i += 2) {
            __m256d v = _mm256_loadu_pd(p + 2 * i);
            _mm256_storeu_pd(p + 2 * i, cmul_const(v, f_re, f_im));
        }
        for (; i < dim; i++)
            amps[i] *= factor;
        return;
    }

    const uint64_t run = detail::run_length(mask);
    if (run >= 2) {
        detail::for_each_run(n, mask, val, [&](uint64_t base) {
            for (uint64_t j = 0; j < run; j += 2) {
                __m256d v = _mm256_loadu_pd(p + 2 * (base + j));
                _mm256_storeu_pd(p + 2 * (base + j), cmul_const(v, f_re, f_im));
            }
        });
        return;
    }

    detail::for_each_fixed(n, mask, val, [&](uint64_t i) { amps[i] *= factor; });
}

inline double hsum(__m256d v)
{
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double norm_sq_avx2(const cplx* amps, size_t len)
{
    const double* p = reinterpret_cast<const double*>(amps);
    __m256d acc = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        __m256d v = _mm256_loadu_pd(p + 2 * i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double total = hsum(acc);
    for (; i < len; i++)
        total += amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    return total;
}

double masked_prob_avx2(const cplx* amps, unsigned n, uint64_t mask, uint64_t val)
{
    if (mask == 0)
        return norm_sq_avx2(amps, 1ull << n);

    const double* p = reinterpret_cast<const double*>(amps);
    const uint64_t run = detail::run_length(mask);
    double total = 0.0;
    if (run >= 2) {
        __m256d acc = _mm256_setzero_pd();
        detail::for_each_run(n, mask, val, [&](uint64_t base) {
            for (uint64_t j = 0; j < run; j += 2) {
                __m256d v = _mm256_loadu_pd(p + 2 * (base + j));
                acc = _mm256_fmadd_pd(v, v, acc);
            }
        });
        return hsum(acc);
    }
    detail::for_each_fixed(n, mask, val, [&](uint64_t i) {
        total += amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    });
    return total;
}

cplx inner_avx2(const cplx* x, const cplx* y, size_t len)
{
    const double* px = reinterpret_cast<const double*>(x);
    const double* py = reinterpret_cast<const double*>(y);
    __m256d acc_re = _mm256_setzero_pd(); // xr*yr, xi*yi pairs
    __m256d acc_im = _mm256_setzero_pd(); // xi*yr, xr*yi pairs
    size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        __m256d vx = _mm256_loadu_pd(px + 2 * i);
        __m256d vy = _mm256_loadu_pd(py + 2 * i);
        acc_re = _mm256_fmadd_pd(vx, vy, acc_re);
        acc_im = _mm256_fmadd_pd(_mm256_permute_pd(vx, 0x5), vy, acc_im);
    }
    double re = hsum(acc_re);
    // imag = sum over odd lanes minus sum over even lanes of acc_im.
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc_im);
    double im = lanes[1] + lanes[3] - lanes[0] - lanes[2];
    for (; i < len; i++) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

void scale_avx2(cplx* amps, size_t len, double factor)
{
    double* p = reinterpret_cast<double*>(amps);
    const __m256d f = _mm256_set1_pd(factor);
    size_t i = 0;
    for (; i + 2 <= len; i += 2)
        _mm256_storeu_pd(p + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(p + 2 * i), f));
    for (; i < len; i++)
        amps[i] *= factor;
}

void reset_qubit_avx2(cplx* amps, unsigned n, unsigned target, int outcome, double inv_norm)
{
    double* p = reinterpret_cast<double*>(amps);
    const uint64_t tbit = 1ull << target;
    const uint64_t run = detail::run_length(tbit);
    const __m256d f = _mm256_set1_pd(inv_norm);
    const __m256d zero = _mm256_setzero_pd();

    if (run >= 2) {
        detail::for_each_run(n, tbit, 0, [&](uint64_t base) {
            for (uint64_t j = 0; j < run; j += 2) {
                double* p0 = p + 2 * (base + j);
                double* p1 = p + 2 * (base + j + tbit);
                __m256d src = _mm256_loadu_pd(outcome ? p1 : p0);
                _mm256_storeu_pd(p0, _mm256_mul_pd(src, f));
                _mm256_storeu_pd(p1, zero);
            }
        });
        return;
    }

    detail::for_each_fixed(n, tbit, 0, [&](uint64_t i) {
        amps[i] = (outcome ? amps[i | tbit] : amps[i]) * inv_norm;
        amps[i | tbit] = 0.0;
    });
}

} // namespace

const ops* avx2_ops()
{
    static const ops table = {
        "avx2",        unitary2_avx2, pauli_x_avx2, phase_avx2,
        norm_sq_avx2,  masked_prob_avx2, inner_avx2, scale_avx2,
        reset_qubit_avx2,
    };
    return &table;
}

} // namespace gcq::kernels

#else // non-x86 build: no AVX2 table

namespace gcq::kernels {
const ops* avx2_ops()
{
    return nullptr;
}
} // namespace gcq::kernels

#endif
