// Shared index-enumeration helpers for the amplitude kernels.
#pragma once

#include <bit>
#include <cstdint>

namespace gcq::kernels::detail {

// Visit every index i in [0, 2^n) with (i & fixed_mask) == fixed_val, in
// ascending order. Ascending subset enumeration over the free bits: the
// next free-bit pattern of g is (g - free) & free.
template <class F>
inline void for_each_fixed(unsigned n_qubits, uint64_t fixed_mask, uint64_t fixed_val, F&& f)
{
    const uint64_t free_mask = ~fixed_mask & ((n_qubits >= 64) ? ~0ull : ((1ull << n_qubits) - 1));
    uint64_t g = 0;
    do {
        f(g | fixed_val);
        g = (g - free_mask) & free_mask;
    } while (g != 0);
}

// Length of the contiguous index runs produced by for_each_fixed: all bits
// below the lowest fixed bit are free, so matching indices come in blocks
// of 2^countr_zero(fixed_mask).
inline uint64_t run_length(uint64_t fixed_mask)
{
    return fixed_mask == 0 ? 0 : (1ull << std::countr_zero(fixed_mask));
}

// Visit the start of every contiguous run; the caller handles `run` indices
// from there.
template <class F>
inline void for_each_run(unsigned n_qubits, uint64_t fixed_mask, uint64_t fixed_val, F&& f)
{
    const uint64_t run = run_length(fixed_mask);
    const uint64_t dim = 1ull << n_qubits;
    const uint64_t outer_free = ~fixed_mask & (dim - 1) & ~(run - 1);
    uint64_t g = 0;
    do {
        f(g | fixed_val);
        g = (g - outer_free) & outer_free;
    } while (g != 0);
}

} // namespace gcq::kernels::detail
