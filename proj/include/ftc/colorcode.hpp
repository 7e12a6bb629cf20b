#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ftc/complex.hpp"
#include "ftc/network.hpp"

// Color-code fusion networks: complexes with a triangulated 2-skeleton and
// 3-colorable vertices carry a color-code resource state on every 3-cell,
// a fusion on every face, and an X and Z check on every vertex.

namespace ftc::color {

struct InvalidColorComplex : std::runtime_error {
    explicit InvalidColorComplex(const std::string& m) : std::runtime_error(m) {}
};

/// Exact backtracking search, deterministic; nullopt when no proper
/// 3-coloring exists (or the node budget is exhausted — see
/// validate_color_complex notes).
std::optional<VertexColoring> find_vertex_3coloring(const CellComplex& K,
                                                    long long node_budget = 20'000'000);

bool is_proper_3coloring(const CellComplex& K, const VertexColoring& col);

/// Valid iff all faces are triangles and the vertices are 3-colorable.
ValidationReport validate_color_complex(const CellComplex& K);

struct ColorNetwork {
    CellComplex complex;
    VertexColoring coloring;
    std::size_t num_qubits = 0;  // two per face: qubit = 2*face + cell slot

    pauli::GeneratorSet resource_group;  // X and Z stabilizer per (cell, vertex)
    pauli::GeneratorSet fusion_group;    // XX, ZZ per face
    std::vector<fbqc::Check> checks;     // X and Z check per vertex; support = faces

    std::uint32_t qubit(std::uint32_t face, int slot) const { return 2 * face + slot; }
};

ColorNetwork build_color_network(const CellComplex& K, const VertexColoring& coloring);

/// Every check word lies in R ∩ F and the per-cell resource stabilizers
/// pairwise commute.
bool verify_color_network(const ColorNetwork& net);

}  // namespace ftc::color
