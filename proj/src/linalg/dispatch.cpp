#include "qalg/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace qalg::simd {

namespace {

bool detect_avx2()
{
#if QALG_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Isa initial_isa()
{
    // QALG_SIMD=scalar forces the reference path.
    const char* env = std::getenv("QALG_SIMD");
    if (env && std::strcmp(env, "scalar") == 0)
        return Isa::scalar;
    return detect_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current()
{
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

}  // namespace

std::string_view isa_name(Isa isa)
{
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

bool avx2_available()
{
    static const bool available = detect_avx2();
    return available;
}

Isa active_isa()
{
    return current().load(std::memory_order_relaxed);
}

void set_isa(Isa isa)
{
    if (isa == Isa::avx2 && !avx2_available())
        return;
    current().store(isa, std::memory_order_relaxed);
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p,
              std::size_t n)
{
#if QALG_HAVE_AVX2_KERNELS
    if (active_isa() == Isa::avx2) {
        avx2::axpy_mod(dst, src, c, p, n);
        return;
    }
#endif
    scalar::axpy_mod(dst, src, c, p, n);
}

void scale_mod(std::uint32_t* dst, std::uint32_t c, std::uint32_t p, std::size_t n)
{
#if QALG_HAVE_AVX2_KERNELS
    if (active_isa() == Isa::avx2) {
        avx2::scale_mod(dst, c, p, n);
        return;
    }
#endif
    scalar::scale_mod(dst, c, p, n);
}

}  // namespace qalg::simd
