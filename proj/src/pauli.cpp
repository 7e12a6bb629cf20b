#include "ftc/pauli.hpp"

#include <algorithm>
#include <stdexcept>

#include "ftc/gf2.hpp"

namespace ftc::pauli {

PauliWord PauliWord::from_string(const std::string& s) {
    PauliWord w(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        switch (s[i]) {
            case 'I': break;
            case 'X': w.x_.set(i); break;
            case 'Z': w.z_.set(i); break;
            case 'Y': w.x_.set(i); w.z_.set(i); break;
            default: throw std::invalid_argument("bad Pauli character: " + s.substr(i, 1));
        }
    }
    return w;
}

std::string PauliWord::to_string() const {
    std::string s(n_, 'I');
    for (std::size_t i = 0; i < n_; ++i) {
        bool bx = x_.get(i), bz = z_.get(i);
        if (bx && bz)
            s[i] = 'Y';
        else if (bx)
            s[i] = 'X';
        else if (bz)
            s[i] = 'Z';
    }
    return s;
}

bool commutes(const PauliWord& a, const PauliWord& b) {
    if (a.num_qubits() != b.num_qubits())
        throw LengthMismatch("commutes: qubit counts differ");
    bool anti = BitVec::overlap_parity(a.x(), b.z()) ^ BitVec::overlap_parity(a.z(), b.x());
    return !anti;
}

void GeneratorSet::add(PauliWord w, std::int64_t label) {
    if (w.num_qubits() != n_)
        throw LengthMismatch("GeneratorSet::add: qubit count mismatch");
    gens_.push_back(std::move(w));
    labels_.push_back(label);
}

namespace {

using Gf2Matrix = gf2::Matrix;

// Column order interleaves x and z per qubit, lowest qubit index first.
BitVec word_to_row(const PauliWord& w) {
    std::size_t n = w.num_qubits();
    BitVec r(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
        if (w.x().get(q)) r.set(2 * q);
        if (w.z().get(q)) r.set(2 * q + 1);
    }
    return r;
}

PauliWord row_to_word(const BitVec& r, std::size_t n) {
    PauliWord w(n);
    for (std::size_t q = 0; q < n; ++q) {
        if (r.get(2 * q)) w.set_x(q);
        if (r.get(2 * q + 1)) w.set_z(q);
    }
    return w;
}

Gf2Matrix to_matrix(const GeneratorSet& g) {
    Gf2Matrix m;
    m.cols = 2 * g.num_qubits();
    m.rows.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) m.rows.push_back(word_to_row(g[i]));
    return m;
}

}  // namespace

GeneratorSet span_reduce(const GeneratorSet& g) {
    Gf2Matrix m = to_matrix(g);
    m.reduce();
    GeneratorSet out(g.num_qubits());
    for (const auto& r : m.rows) out.add(row_to_word(r, g.num_qubits()));
    return out;
}

std::size_t rank(const GeneratorSet& g) {
    Gf2Matrix m = to_matrix(g);
    m.reduce();
    return m.rows.size();
}

bool in_span(const GeneratorSet& g, const PauliWord& w) {
    if (w.num_qubits() != g.num_qubits())
        throw LengthMismatch("in_span: qubit count mismatch");
    Gf2Matrix m = to_matrix(g);
    m.reduce();
    BitVec v = word_to_row(w);
    m.reduce_vector(v);
    return v.is_zero();
}

bool same_span(const GeneratorSet& a, const GeneratorSet& b) {
    if (a.num_qubits() != b.num_qubits()) return false;
    Gf2Matrix ma = to_matrix(a), mb = to_matrix(b);
    ma.reduce();
    mb.reduce();
    return ma.rows == mb.rows;  // RREF is canonical
}

GeneratorSet group_intersection(const GeneratorSet& a, const GeneratorSet& b) {
    if (a.num_qubits() != b.num_qubits())
        throw LengthMismatch("group_intersection: qubit count mismatch");
    std::size_t n = a.num_qubits(), w = 2 * n;
    // Zassenhaus: rows [a|a] and [b|0]; after elimination, rows with zero
    // left half carry the intersection in their right half.
    Gf2Matrix m;
    m.cols = 2 * w;
    for (std::size_t i = 0; i < a.size(); ++i) {
        BitVec left = word_to_row(a[i]);
        BitVec row(2 * w);
        for (std::size_t c = 0; c < w; ++c)
            if (left.get(c)) { row.set(c); row.set(w + c); }
        m.rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        BitVec left = word_to_row(b[i]);
        BitVec row(2 * w);
        for (std::size_t c = 0; c < w; ++c)
            if (left.get(c)) row.set(c);
        m.rows.push_back(std::move(row));
    }
    m.reduce();
    GeneratorSet out(n);
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        if (m.pivots[i] < w) continue;  // nonzero left half
        BitVec right(w);
        for (std::size_t c = 0; c < w; ++c)
            if (m.rows[i].get(w + c)) right.set(c);
        out.add(row_to_word(right, n));
    }
    return span_reduce(out);
}

GeneratorSet centralizer(const GeneratorSet& g) {
    std::size_t n = g.num_qubits();
    // w commutes with g_i  <=>  <g_i.z, w.x> + <g_i.x, w.z> = 0,
    // i.e. the functional row for g_i is g_i with x and z swapped.
    Gf2Matrix m;
    m.cols = 2 * n;
    for (std::size_t i = 0; i < g.size(); ++i) {
        PauliWord swapped(n);
        swapped.x() = g[i].z();
        swapped.z() = g[i].x();
        m.rows.push_back(word_to_row(swapped));
    }
    m.reduce();
    GeneratorSet out(n);
    for (auto& v : m.kernel()) out.add(row_to_word(v, n));
    return out;
}

GeneratorSet centralizer_intersection(const GeneratorSet& g) {
    return group_intersection(centralizer(g), g);
}

std::vector<PauliWord> enumerate_span(const GeneratorSet& g, std::size_t max_rank) {
    GeneratorSet red = span_reduce(g);
    if (red.size() > max_rank)
        throw std::runtime_error("enumerate_span: rank too large to enumerate");
    std::size_t n = g.num_qubits(), r = red.size();
    std::vector<PauliWord> out;
    out.reserve(std::size_t{1} << r);
    PauliWord cur(n);
    out.push_back(cur);
    // Gray code walk over the 2^r combinations.
    for (std::size_t k = 1; k < (std::size_t{1} << r); ++k) {
        std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(k));
        cur *= red[bit];
        out.push_back(cur);
    }
    return out;
}

}  // namespace ftc::pauli
