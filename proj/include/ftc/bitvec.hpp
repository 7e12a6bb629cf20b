#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ftc/bitops.hpp"

namespace ftc {

/// Fixed-length bit vector over GF(2), packed into 64-bit words.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }
    std::size_t num_words() const { return words_.size(); }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= m;
        else
            words_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }
    bool is_zero() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    BitVec& operator^=(const BitVec& o) {
        bitops::xor_into(words_.data(), o.words_.data(), words_.size());
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    bool operator==(const BitVec& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }

    std::size_t weight() const { return bitops::popcount(words_.data(), words_.size()); }

    /// |a & b|
    static std::size_t overlap(const BitVec& a, const BitVec& b) {
        return bitops::and_popcount(a.words_.data(), b.words_.data(), a.words_.size());
    }
    /// parity of |a & b|
    static bool overlap_parity(const BitVec& a, const BitVec& b) {
        return overlap(a, b) & 1u;
    }
    /// |a | b|
    static std::size_t union_weight(const BitVec& a, const BitVec& b) {
        return bitops::or_popcount(a.words_.data(), b.words_.data(), a.words_.size());
    }

    // Lowest set bit position, or size() if none.
    std::size_t lowest_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return (w << 6) + static_cast<std::size_t>(__builtin_ctzll(words_[w]));
        return nbits_;
    }

    const std::uint64_t* data() const { return words_.data(); }
    std::uint64_t* data() { return words_.data(); }

    // Strict ordering, for canonical/deterministic containers.
    bool operator<(const BitVec& o) const { return words_ < o.words_; }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace ftc
