#include "ftc/bitops.hpp"

namespace ftc::bitops {

namespace {

struct Kernels {
    void (*xor_into)(std::uint64_t*, const std::uint64_t*, std::size_t);
    std::uint64_t (*popcount)(const std::uint64_t*, std::size_t);
    std::uint64_t (*and_popcount)(const std::uint64_t*, const std::uint64_t*, std::size_t);
    std::uint64_t (*or_popcount)(const std::uint64_t*, const std::uint64_t*, std::size_t);
    Backend backend;
};

constexpr Kernels kScalar{detail::xor_into_scalar, detail::popcount_scalar,
                          detail::and_popcount_scalar, detail::or_popcount_scalar,
                          Backend::scalar};

Kernels detect() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2"))
        return {detail::xor_into_avx2, detail::popcount_avx2, detail::and_popcount_avx2,
                detail::or_popcount_avx2, Backend::avx2};
#elif defined(__aarch64__)
    return {detail::xor_into_neon, detail::popcount_neon, detail::and_popcount_neon,
            detail::or_popcount_neon, Backend::neon};
#endif
    return kScalar;
}

Kernels g_kernels = detect();

}  // namespace

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    g_kernels.xor_into(dst, src, n);
}

std::uint64_t popcount(const std::uint64_t* a, std::size_t n) {
    return g_kernels.popcount(a, n);
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    return g_kernels.and_popcount(a, b, n);
}

std::uint64_t or_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    return g_kernels.or_popcount(a, b, n);
}

Backend active_backend() { return g_kernels.backend; }

Backend force_backend(Backend b) {
    if (b == Backend::scalar) {
        g_kernels = kScalar;
    } else if (b == detect().backend) {
        g_kernels = detect();
    }
    return g_kernels.backend;
}

}  // namespace ftc::bitops
