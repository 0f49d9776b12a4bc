#include "qalg/kernels.hpp"

namespace qalg::simd::scalar {

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p,
              std::size_t n)
{
    if (c == 0)
        return;
    for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t t = dst[k] + static_cast<std::uint64_t>(c) * src[k];
        dst[k] = static_cast<std::uint32_t>(t % p);
    }
}

void scale_mod(std::uint32_t* dst, std::uint32_t c, std::uint32_t p, std::size_t n)
{
    for (std::size_t k = 0; k < n; ++k)
        dst[k] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * dst[k] % p);
}

}  // namespace qalg::simd::scalar
