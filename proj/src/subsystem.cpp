#include "ftc/subsystem.hpp"

#include <algorithm>
#include <map>

namespace ftc::sub {

SubsystemCode build_subsystem_code(const CellComplex& K, const VertexColoring& vcol,
                                   const CellColoring& ccol) {
    if (!validate_fusion_complex(K).valid)
        throw MalformedComplex("subsystem code requires a fusion complex");
    if (vcol.color.size() != K.num_vertices)
        throw VerticesNotBicolorable("vertex coloring size mismatch");
    for (std::uint32_t e = 0; e < K.num_edges(); ++e) {
        auto [a, b] = K.edges[e];
        if (a == b || vcol.color[a] == vcol.color[b])
            throw VerticesNotBicolorable("vertex coloring is not proper at edge " +
                                         std::to_string(e));
    }

    SubsystemCode code;
    code.num_qubits = K.num_edges();
    code.vertex_color = vcol.color;
    code.cell_color = ccol.color;
    code.gauge = pauli::GeneratorSet(code.num_qubits);
    code.stabilizers = pauli::GeneratorSet(code.num_qubits);

    for (std::uint32_t c = 0; c < K.num_cells(); ++c) {
        auto edges = K.cell_edge_multiset(c);
        CheckType t = ccol.color[c];

        pauli::PauliWord stab(code.num_qubits);
        std::map<std::uint32_t, std::vector<std::uint32_t>> corner_support;  // vertex -> qubits
        for (auto [e, mult] : edges) {
            if (mult % 2) {
                if (t == CheckType::X)
                    stab.set_x(e);
                else
                    stab.set_z(e);
            }
            for (std::uint32_t i = 0; i < mult; ++i) {
                corner_support[K.edges[e][0]].push_back(e);
                corner_support[K.edges[e][1]].push_back(e);
            }
        }
        code.stabilizers.add(stab, c);
        code.stab_cell.push_back(c);

        for (auto& [v, qubits] : corner_support) {
            pauli::PauliWord g(code.num_qubits);
            for (auto e : qubits) {
                if (t == CheckType::X)
                    g.x().flip(e);
                else
                    g.z().flip(e);
            }
            code.gauge.add(g, static_cast<std::int64_t>(c) * K.num_vertices + v);
            code.corner.push_back({c, v});
        }
    }
    return code;
}

ValidationReport verify_subsystem_code(const SubsystemCode& code) {
    ValidationReport rep;

    // (i) stabilizers commute with every gauge generator
    for (std::size_t s = 0; s < code.stabilizers.size(); ++s) {
        for (std::size_t g = 0; g < code.gauge.size(); ++g) {
            if (!pauli::commutes(code.stabilizers[s], code.gauge[g])) {
                rep.fail("gauge-stabilizer-commutation",
                         static_cast<std::int64_t>(code.corner[g].first),
                         "gauge corner (cell " + std::to_string(code.corner[g].first) +
                             ", vertex " + std::to_string(code.corner[g].second) +
                             ") anticommutes with stabilizer of cell " +
                             std::to_string(code.stab_cell[s]));
            }
        }
    }

    // (ii) each stabilizer arises as a corner product over either vertex class
    for (std::size_t s = 0; s < code.stabilizers.size(); ++s) {
        std::uint32_t cell = code.stab_cell[s];
        for (int cls = 0; cls < 2; ++cls) {
            pauli::PauliWord prod(code.num_qubits);
            for (std::size_t g = 0; g < code.gauge.size(); ++g) {
                if (code.corner[g].first != cell) continue;
                if (code.vertex_color[code.corner[g].second] != cls) continue;
                prod *= code.gauge[g];
            }
            if (!(prod == code.stabilizers[s]))
                rep.fail("two-ways-product", cell,
                         "corner product over vertex class " + std::to_string(cls) +
                             " does not give the cell stabilizer");
        }
    }

    // (iii) small instances: S inside Z(G) ∩ G; rank gap = logical count
    if (code.num_qubits <= 200) {
        auto zg = pauli::centralizer_intersection(code.gauge);
        for (std::size_t s = 0; s < code.stabilizers.size(); ++s) {
            if (!pauli::in_span(zg, code.stabilizers[s]))
                rep.fail("stabilizer-outside-center", code.stab_cell[s],
                         "stabilizer not contained in Z(G) ∩ G");
        }
        std::size_t rs = pauli::rank(code.stabilizers);
        std::size_t rz = pauli::rank(zg);
        rep.notes.push_back("rank(Z(G) ∩ G) = " + std::to_string(rz) + ", rank(S) = " +
                            std::to_string(rs) + ", logical generators = " +
                            std::to_string(rz - rs));
    }
    return rep;
}

}  // namespace ftc::sub
