#if defined(__aarch64__)

#include "ftc/bitops.hpp"

#include <arm_neon.h>

#include <bit>

namespace ftc::bitops::detail {

void xor_into_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t d = vld1q_u64(dst + i);
        uint64x2_t s = vld1q_u64(src + i);
        vst1q_u64(dst + i, veorq_u64(d, s));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

namespace {
inline std::uint64_t popcnt128(uint64x2_t v) {
    uint8x16_t c = vcntq_u8(vreinterpretq_u8_u64(v));
    return vaddvq_u8(c);
}
}  // namespace

std::uint64_t popcount_neon(const std::uint64_t* a, std::size_t n) {
    std::uint64_t c = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) c += popcnt128(vld1q_u64(a + i));
    for (; i < n; ++i) c += std::popcount(a[i]);
    return c;
}

std::uint64_t and_popcount_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t c = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        c += popcnt128(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < n; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

std::uint64_t or_popcount_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t c = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        c += popcnt128(vorrq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < n; ++i) c += std::popcount(a[i] | b[i]);
    return c;
}

}  // namespace ftc::bitops::detail

#endif  // __aarch64__
