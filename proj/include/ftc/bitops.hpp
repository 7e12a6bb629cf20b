#pragma once

#include <cstddef>
#include <cstdint>

// Word-level GF(2) kernels behind the bit-vector types. Scalar reference
// implementations always exist; on x86-64 an AVX2 variant is selected at
// runtime when the CPU supports it, on AArch64 a NEON variant. The active
// backend can be overridden (for equivalence tests) via force_backend().

namespace ftc::bitops {

enum class Backend { scalar, avx2, neon };

// dst[i] ^= src[i]
void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);

// sum of popcounts
std::uint64_t popcount(const std::uint64_t* a, std::size_t nwords);

// popcount(a & b)
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t nwords);

// popcount(a | b)
std::uint64_t or_popcount(const std::uint64_t* a, const std::uint64_t* b,
                          std::size_t nwords);

Backend active_backend();

// Test hook: force a specific backend (no-op if unsupported on this CPU).
// Returns the backend actually selected.
Backend force_backend(Backend b);

namespace detail {
void xor_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
std::uint64_t popcount_scalar(const std::uint64_t* a, std::size_t n);
std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
std::uint64_t or_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
void xor_into_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
std::uint64_t popcount_avx2(const std::uint64_t* a, std::size_t n);
std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
std::uint64_t or_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
#endif

#if defined(__aarch64__)
void xor_into_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
std::uint64_t popcount_neon(const std::uint64_t* a, std::size_t n);
std::uint64_t and_popcount_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
std::uint64_t or_popcount_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
#endif
}  // namespace detail

}  // namespace ftc::bitops
