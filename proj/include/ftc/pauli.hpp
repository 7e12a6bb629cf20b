#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftc/bitvec.hpp"

// Binary-symplectic Pauli algebra over GF(2). Phases are dropped throughout:
// a word is just its (x,z) bit pair, and Y counts as X·Z on the same qubit.

namespace ftc::pauli {

struct LengthMismatch : std::runtime_error {
    explicit LengthMismatch(const std::string& m) : std::runtime_error(m) {}
};

class PauliWord {
public:
    PauliWord() = default;
    explicit PauliWord(std::size_t n) : n_(n), x_(n), z_(n) {}

    static PauliWord from_string(const std::string& s);
    std::string to_string() const;

    std::size_t num_qubits() const { return n_; }
    BitVec& x() { return x_; }
    BitVec& z() { return z_; }
    const BitVec& x() const { return x_; }
    const BitVec& z() const { return z_; }

    void set_x(std::size_t q) { x_.set(q); }
    void set_z(std::size_t q) { z_.set(q); }

    bool identity() const { return x_.is_zero() && z_.is_zero(); }

    /// |support(x) ∪ support(z)|
    std::size_t weight() const { return BitVec::union_weight(x_, z_); }

    PauliWord& operator*=(const PauliWord& o) {
        x_ ^= o.x_;
        z_ ^= o.z_;
        return *this;
    }
    friend PauliWord operator*(PauliWord a, const PauliWord& b) { return a *= b; }
    bool operator==(const PauliWord& o) const { return x_ == o.x_ && z_ == o.z_; }
    bool operator<(const PauliWord& o) const {
        return x_ < o.x_ || (x_ == o.x_ && z_ < o.z_);
    }

private:
    std::size_t n_ = 0;
    BitVec x_, z_;
};

/// Symplectic form: true iff a and b commute.
bool commutes(const PauliWord& a, const PauliWord& b);

class GeneratorSet {
public:
    GeneratorSet() = default;
    explicit GeneratorSet(std::size_t n) : n_(n) {}

    std::size_t num_qubits() const { return n_; }
    std::size_t size() const { return gens_.size(); }
    const PauliWord& operator[](std::size_t i) const { return gens_[i]; }
    const std::vector<PauliWord>& generators() const { return gens_; }
    const std::vector<std::int64_t>& labels() const { return labels_; }

    void add(PauliWord w, std::int64_t label = -1);

    bool empty() const { return gens_.empty(); }

private:
    std::size_t n_ = 0;
    std::vector<PauliWord> gens_;
    std::vector<std::int64_t> labels_;  // provenance (element ids), -1 if none
};

/// Independent generators spanning the same group, in canonical reduced
/// row-echelon form with pivots at the lowest qubit indices first.
GeneratorSet span_reduce(const GeneratorSet& g);

std::size_t rank(const GeneratorSet& g);

/// Membership of w in the span of g.
bool in_span(const GeneratorSet& g, const PauliWord& w);

/// True iff span(a) == span(b).
bool same_span(const GeneratorSet& a, const GeneratorSet& b);

/// Generators of span(a) ∩ span(b) (Zassenhaus).
GeneratorSet group_intersection(const GeneratorSet& a, const GeneratorSet& b);

/// Generators of the centralizer Z(g) inside the full Pauli group:
/// all words commuting with every generator of g.
GeneratorSet centralizer(const GeneratorSet& g);

/// Generators of Z(g) ∩ g.
GeneratorSet centralizer_intersection(const GeneratorSet& g);

/// Every group element of span(g); throws if rank exceeds max_rank.
std::vector<PauliWord> enumerate_span(const GeneratorSet& g, std::size_t max_rank = 20);

}  // namespace ftc::pauli
