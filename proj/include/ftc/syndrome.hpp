#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ftc/complex.hpp"

// X/Z syndrome graphs (checks as vertices, fusion outcomes as edges),
// Table-style structural profiles, torus-homology logical membranes, and
// the triplet of homology complexes with its reinterpretation map.

namespace ftc::syn {

struct InvalidComplex : std::runtime_error {
    explicit InvalidComplex(const std::string& m) : std::runtime_error(m) {}
};
struct HomologyRankUnexpected : std::runtime_error {
    explicit HomologyRankUnexpected(const std::string& m) : std::runtime_error(m) {}
};

struct SyndromeGraph {
    CheckType type;
    std::size_t num_checks = 0;
    std::vector<std::uint32_t> check_cell;  // graph vertex -> complex cell id

    struct Edge {
        std::uint32_t a, b;            // check vertices (a == b for self-loops)
        std::uint32_t complex_edge;    // provenance
    };
    std::vector<Edge> edges;  // one per complex edge, indexed by complex edge id

    std::vector<std::size_t> degrees() const;
};

std::pair<SyndromeGraph, SyndromeGraph> build_syndrome_graphs(const CellComplex& K,
                                                              const CellColoring& coloring);

/// Degree/size multiset normalized per structural unit cell, formatted in
/// the n1×d1+... style ("2×6+12").
struct Profile {
    std::map<std::size_t, std::size_t> counts;  // degree -> count per unit cell
    std::string format() const;
};

/// (check-degree profile over both colors, resource-size profile).
std::pair<Profile, Profile> check_profiles(const CellComplex& K, const CellColoring& coloring);

struct LogicalMembrane {
    CheckType type;
    std::string homology_class;        // "yz", "zx", "xy"
    std::vector<std::uint32_t> edges;  // complex edge ids
};

/// Three independent logical membranes of the given check type, one per
/// torus 2-cycle class: GF(2) 2-cycles of the type-restricted homology
/// complex, nontrivial modulo check boundaries.
std::vector<LogicalMembrane> logical_membranes(const CellComplex& K, const CellColoring& coloring,
                                               CheckType type);

struct TripletComplexes {
    CellComplex r_complex;  // dual of the fusion complex
    CellComplex x_complex;  // faces = fusions, cells = X checks
    CellComplex z_complex;  // faces = fusions, cells = Z checks
    // In all three, face id == complex edge id of the source complex.
};

TripletComplexes derive_triplet(const CellComplex& K, const CellColoring& coloring);

/// Dual of the selected homology complex, read as a new fusion complex.
CellComplex reinterpret_as_fusion_complex(const TripletComplexes& t, char which /* R, X, Z */);

/// Test cycles through the syndrome graph wrapping each torus direction
/// once; used to classify membranes and verify their independence.
/// Returned as edge-id sets, windings[i] = winding vector of cycle i.
struct TestCycles {
    std::vector<std::vector<std::uint32_t>> edge_sets;  // 3 cycles
    std::array<std::array<int, 3>, 3> windings;
};
TestCycles wrap_cycles(const CellComplex& K, const SyndromeGraph& g);

}  // namespace ftc::syn
