// Runtime selection of the kernel table.
#include "gcq/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace gcq::kernels {

namespace {

const ops& pick()
{
    const char* forced = std::getenv("GCQ_KERNELS");
    if (forced != nullptr) {
        if (std::strcmp(forced, "scalar") == 0)
            return scalar_ops();
        if (std::strcmp(forced, "avx2") == 0) {
            const ops* t = avx2_ops();
            if (t == nullptr)
                throw std::runtime_error("GCQ_KERNELS=avx2 requested but AVX2 is unavailable");
            return *t;
        }
        throw std::runtime_error("GCQ_KERNELS must be 'scalar' or 'avx2'");
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        const ops* t = avx2_ops();
        if (t != nullptr)
            return *t;
    }
#endif
    return scalar_ops();
}

} // namespace

const ops& active_ops()
{
    static const ops& selected = pick();
    return selected;
}

} // namespace gcq::kernels
