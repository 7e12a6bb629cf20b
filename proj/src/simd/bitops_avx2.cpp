#if defined(__x86_64__) || defined(_M_X64)

#include "ftc/bitops.hpp"

#include <immintrin.h>

#include <bit>

namespace ftc::bitops::detail {

namespace {

// Nibble-LUT popcount of a 256-bit lane, accumulated as four u64 sums.
__attribute__((target("avx2"))) inline __m256i popcnt256(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

__attribute__((target("avx2"))) inline std::uint64_t hsum(__m256i acc) {
    alignas(32) std::uint64_t tmp[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), acc);
    return tmp[0] + tmp[1] + tmp[2] + tmp[3];
}

}  // namespace

__attribute__((target("avx2"))) void xor_into_avx2(std::uint64_t* dst, const std::uint64_t* src,
                                                   std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

__attribute__((target("avx2"))) std::uint64_t popcount_avx2(const std::uint64_t* a, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, popcnt256(v));
    }
    std::uint64_t c = hsum(acc);
    for (; i < n; ++i) c += std::popcount(a[i]);
    return c;
}

__attribute__((target("avx2"))) std::uint64_t and_popcount_avx2(const std::uint64_t* a,
                                                                const std::uint64_t* b,
                                                                std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcnt256(_mm256_and_si256(va, vb)));
    }
    std::uint64_t c = hsum(acc);
    for (; i < n; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

__attribute__((target("avx2"))) std::uint64_t or_popcount_avx2(const std::uint64_t* a,
                                                               const std::uint64_t* b,
                                                               std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcnt256(_mm256_or_si256(va, vb)));
    }
    std::uint64_t c = hsum(acc);
    for (; i < n; ++i) c += std::popcount(a[i] | b[i]);
    return c;
}

}  // namespace ftc::bitops::detail

#endif  // x86-64
