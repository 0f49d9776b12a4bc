#pragma once
// Row kernels for dense GF(p) elimination.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant compiled with a function-level target attribute. The active
// variant is chosen once at startup from CPUID and can be pinned with
// set_isa() (tests use this to compare the two paths on identical input).

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace qalg::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// True if the running CPU can execute the AVX2 kernels.
bool avx2_available();

/// The variant the dispatching entry points currently route to.
Isa active_isa();

/// Pin the variant. Requesting avx2 on a CPU without it is ignored.
void set_isa(Isa isa);

/// Largest modulus the AVX2 kernels handle natively; above this they defer
/// to the scalar path (c*x + y must stay below 2^31 in a 32-bit lane).
inline constexpr std::uint32_t kAvx2MaxModulus = 46340;

// dst[k] = (dst[k] + c * src[k]) mod p, all operands reduced.
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p,
              std::size_t n);
// dst[k] = (c * dst[k]) mod p
void scale_mod(std::uint32_t* dst, std::uint32_t c, std::uint32_t p, std::size_t n);

namespace scalar {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p,
              std::size_t n);
void scale_mod(std::uint32_t* dst, std::uint32_t c, std::uint32_t p, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define QALG_HAVE_AVX2_KERNELS 1
namespace avx2 {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p,
              std::size_t n);
void scale_mod(std::uint32_t* dst, std::uint32_t c, std::uint32_t p, std::size_t n);
}  // namespace avx2
#else
#define QALG_HAVE_AVX2_KERNELS 0
#endif

}  // namespace qalg::simd
