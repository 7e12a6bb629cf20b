#pragma once

#include <cstdint>
#include <vector>

#include "ftc/complex.hpp"
#include "ftc/pauli.hpp"

// Fusion network derived from a fusion complex: one resource state per
// vertex, one {XX,ZZ} fusion per edge, one check per 3-cell. Each edge
// carries two qubits, one per endpoint; qubit ids are 2*edge + slot with
// slot 0 at the lesser endpoint.

namespace ftc::fbqc {

struct InvalidComplex : std::runtime_error {
    explicit InvalidComplex(const std::string& m) : std::runtime_error(m) {}
};
struct InvalidColoring : std::runtime_error {
    explicit InvalidColoring(const std::string& m) : std::runtime_error(m) {}
};

struct Check {
    std::uint32_t cell;
    CheckType type;
    std::vector<std::uint32_t> support;  // edge ids with odd multiplicity in the cell
    pauli::PauliWord word;
};

struct FusionNetwork {
    CellComplex complex;
    CellColoring coloring;
    std::size_t num_qubits = 0;  // 2 * |E|

    pauli::GeneratorSet resource_group;  // R: all resource-state stabilizers
    pauli::GeneratorSet fusion_group;    // F: per-edge XX and ZZ
    std::vector<Check> checks;

    std::uint32_t qubit(std::uint32_t edge, int slot) const { return 2 * edge + slot; }
    /// Slot of vertex v on edge e (0 = lesser endpoint).
    int slot_of(std::uint32_t e, std::uint32_t v) const;
    /// Qubit of vertex v on edge e.
    std::uint32_t qubit_at(std::uint32_t e, std::uint32_t v) const {
        return qubit(e, slot_of(e, v));
    }
};

FusionNetwork build_network(const CellComplex& K, const CellColoring& coloring);

/// Stabilizers of the resource state at vertex v, on its own deg(v)-qubit
/// register (qubits ordered by (edge id, slot)): one plaquette per incident
/// cell, typed by the cell color.
pauli::GeneratorSet resource_state_stabilizers(const CellComplex& K, const CellColoring& coloring,
                                               std::uint32_t v);

/// Check-group identity: every check word lies in R and in F, and the
/// checks span exactly R ∩ F.
bool verify_check_group(const FusionNetwork& net);

struct BoundaryState {
    std::vector<std::uint32_t> boundary_qubits;  // unmeasured qubits of the region
    std::vector<Check> checks;                   // nontrivial check restrictions
};

/// Restrict checks of cells touching the region boundary to the un-fused
/// qubits (cut edges, slot on the inside endpoint).
BoundaryState boundary_state(const FusionNetwork& net, const std::vector<std::uint8_t>& in_region);

}  // namespace ftc::fbqc
