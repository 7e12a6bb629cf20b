#pragma once

#include <cstdint>
#include <vector>

#include "ftc/complex.hpp"
#include "ftc/pauli.hpp"

// 3d subsystem toric codes from fusion complexes with bi-colorable
// vertices: one qubit per edge, gauge generators on cell corners,
// stabilizers on cells.

namespace ftc::sub {

struct VerticesNotBicolorable : std::runtime_error {
    explicit VerticesNotBicolorable(const std::string& m) : std::runtime_error(m) {}
};

struct SubsystemCode {
    std::size_t num_qubits = 0;  // one per complex edge
    std::vector<std::uint8_t> vertex_color;
    std::vector<CheckType> cell_color;

    pauli::GeneratorSet gauge;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> corner;  // (cell, vertex) per gauge gen

    pauli::GeneratorSet stabilizers;
    std::vector<std::uint32_t> stab_cell;
};

SubsystemCode build_subsystem_code(const CellComplex& K, const VertexColoring& vcol,
                                   const CellColoring& ccol);

/// (i) gauge-stabilizer commutation, (ii) each stabilizer equals the
/// product of its corner generators over either vertex color class,
/// (iii) on instances with <= 200 qubits, span(S) ⊆ Z(G) ∩ G with the
/// rank gap reported as the logical count.
ValidationReport verify_subsystem_code(const SubsystemCode& code);

}  // namespace ftc::sub
