#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ftc/complex.hpp"

// Chamber (flag) system of a cell complex: one chamber per maximal
// incidence chain, with adjacency involutions s0..sD (D = dim). This is
// the workhorse behind dualization, canonical forms and isomorphism: a
// connected complex is determined by its chamber graph, and a chamber-graph
// map is fixed by the image of a single chamber.

namespace ftc {

struct ChamberError : std::runtime_error {
    explicit ChamberError(const std::string& m) : std::runtime_error(m) {}
};

struct ChamberSystem {
    int dim = 3;
    std::size_t size = 0;
    // s[i][c] = chamber adjacent to c across rank i (involutions).
    std::array<std::vector<std::uint32_t>, 4> s;
    // element[r][c] = id of the rank-r element of chamber c.
    std::array<std::vector<std::uint32_t>, 4> element;
    std::array<std::size_t, 4> element_count{0, 0, 0, 0};
    // position of the chamber's edge occurrence in its face cycle
    std::vector<std::uint32_t> face_pos;
};

/// Throws ChamberError if the complex is not closed or a cell's surface
/// cannot be resolved (an edge occurs more than twice in one cell).
ChamberSystem build_chambers(const CellComplex& K);

/// Canonical certificate: lexicographically minimal BFS code over all
/// start chambers. Equal certificates <=> isomorphic complexes.
std::vector<std::uint32_t> canonical_certificate(const ChamberSystem& cs);

bool isomorphic(const CellComplex& A, const CellComplex& B);

/// Combinatorial dual (ranks reversed). Works for dim 2 and 3.
CellComplex dualize(const CellComplex& K);

/// Rebuild an explicit complex from a chamber system.
CellComplex extract_complex(const ChamberSystem& cs);

/// Faces around an edge in rotational order. Wedge i holds face f_i, the
/// chamber witnessing that occurrence (for face-position lookup), and the
/// cell sitting between f_i and f_{i+1}.
struct EdgeWedge {
    std::uint32_t face;
    std::uint32_t chamber;
    std::uint32_t cell;
};
std::vector<std::vector<EdgeWedge>> edge_rotations(const CellComplex& K,
                                                   const ChamberSystem& cs);

}  // namespace ftc
