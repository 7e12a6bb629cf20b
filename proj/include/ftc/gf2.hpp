#pragma once

#include <cstddef>
#include <vector>

#include "ftc/bitvec.hpp"

namespace ftc::gf2 {

/// Row-reduction over GF(2) with pivot columns chosen in increasing order;
/// the reduced form is canonical (RREF).
struct Matrix {
    std::size_t cols = 0;
    std::vector<BitVec> rows;
    std::vector<std::size_t> pivots;  // pivot column per echelon row

    void add_row(BitVec v) { rows.push_back(std::move(v)); }

    // Full reduced row echelon form; zero rows are dropped.
    void reduce() {
        pivots.clear();
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
            std::size_t sel = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i].get(c)) {
                    sel = i;
                    break;
                }
            }
            if (sel == rows.size()) continue;
            std::swap(rows[r], rows[sel]);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
            }
            pivots.push_back(c);
            ++r;
        }
        rows.resize(r);
    }

    std::size_t rank() const { return rows.size(); }

    // Reduce v against the echelon rows; v ends zero iff it was in the span.
    void reduce_vector(BitVec& v) const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (v.get(pivots[i])) v ^= rows[i];
        }
    }

    bool in_span(const BitVec& v) const {
        BitVec t = v;
        reduce_vector(t);
        return t.is_zero();
    }

    // Basis of {v : M v = 0} with rows read as linear functionals.
    std::vector<BitVec> kernel() const {
        std::vector<bool> is_pivot(cols, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<BitVec> basis;
        for (std::size_t c = 0; c < cols; ++c) {
            if (is_pivot[c]) continue;
            BitVec v(cols);
            v.set(c);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i].get(c)) v.set(pivots[i]);
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }
};

}  // namespace ftc::gf2
