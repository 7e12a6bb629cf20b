#include "ftc/network.hpp"

#include <algorithm>
#include <map>

namespace ftc::fbqc {

int FusionNetwork::slot_of(std::uint32_t e, std::uint32_t v) const {
    auto [a, b] = complex.edges[e];
    std::uint32_t lesser = std::min(a, b);
    return v == lesser ? 0 : 1;
}

namespace {

// Cells incident to each vertex (deduplicated, ascending).
std::vector<std::vector<std::uint32_t>> vertex_cells(const CellComplex& K) {
    std::vector<std::vector<std::uint32_t>> vc(K.num_vertices);
    for (std::uint32_t c = 0; c < K.num_cells(); ++c) {
        for (auto [e, mult] : K.cell_edge_multiset(c)) {
            (void)mult;
            vc[K.edges[e][0]].push_back(c);
            vc[K.edges[e][1]].push_back(c);
        }
    }
    for (auto& v : vc) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return vc;
}

pauli::PauliWord typed_word(std::size_t n, CheckType t, const std::vector<std::uint32_t>& qubits) {
    pauli::PauliWord w(n);
    for (auto q : qubits) {
        if (t == CheckType::X)
            w.set_x(q);
        else
            w.set_z(q);
    }
    return w;
}

}  // namespace

FusionNetwork build_network(const CellComplex& K, const CellColoring& coloring) {
    {
        auto rep = validate_fusion_complex(K);
        if (!rep.valid) throw InvalidComplex("not a fusion complex: " + rep.violations[0].detail);
    }
    if (!is_proper_cell_coloring(K, coloring)) throw InvalidColoring("improper cell coloring");

    FusionNetwork net;
    net.complex = K;
    net.coloring = coloring;
    net.num_qubits = 2 * K.num_edges();

    // F: per-edge Bell measurement {XX, ZZ}.
    net.fusion_group = pauli::GeneratorSet(net.num_qubits);
    for (std::uint32_t e = 0; e < K.num_edges(); ++e) {
        pauli::PauliWord xx(net.num_qubits), zz(net.num_qubits);
        xx.set_x(2 * e);
        xx.set_x(2 * e + 1);
        zz.set_z(2 * e);
        zz.set_z(2 * e + 1);
        net.fusion_group.add(std::move(xx), e);
        net.fusion_group.add(std::move(zz), e);
    }

    // R: per (vertex, incident cell) plaquette on the vertex's qubits.
    net.resource_group = pauli::GeneratorSet(net.num_qubits);
    auto vc = vertex_cells(K);
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> cell_edges(K.num_cells());
    for (std::uint32_t c = 0; c < K.num_cells(); ++c) cell_edges[c] = K.cell_edge_multiset(c);
    for (std::uint32_t v = 0; v < K.num_vertices; ++v) {
        for (std::uint32_t c : vc[v]) {
            std::vector<std::uint32_t> qubits;
            for (auto [e, mult] : cell_edges[c]) {
                if (mult % 2 == 0) continue;
                auto [a, b] = K.edges[e];
                if (a == v && b == v) {
                    qubits.push_back(net.qubit(e, 0));
                    qubits.push_back(net.qubit(e, 1));
                } else if (a == v || b == v) {
                    qubits.push_back(net.qubit_at(e, v));
                }
            }
            net.resource_group.add(typed_word(net.num_qubits, coloring.color[c], qubits), v);
        }
    }

    // Checks: per cell, the product of its fusion outcomes.
    for (std::uint32_t c = 0; c < K.num_cells(); ++c) {
        Check ck;
        ck.cell = c;
        ck.type = coloring.color[c];
        std::vector<std::uint32_t> qubits;
        for (auto [e, mult] : cell_edges[c]) {
            if (mult % 2 == 0) continue;
            ck.support.push_back(e);
            qubits.push_back(2 * e);
            qubits.push_back(2 * e + 1);
        }
        ck.word = typed_word(net.num_qubits, ck.type, qubits);
        net.checks.push_back(std::move(ck));
    }
    return net;
}

pauli::GeneratorSet resource_state_stabilizers(const CellComplex& K, const CellColoring& coloring,
                                               std::uint32_t v) {
    {
        auto rep = validate_fusion_complex(K);
        if (!rep.valid) throw InvalidComplex("not a fusion complex");
    }
    // Local register: one qubit per edge end at v, ordered by (edge, slot).
    auto canonical_slot = [&](std::uint32_t e, int storage_slot) {
        auto [a, b] = K.edges[e];
        if (a == b) return storage_slot;
        return K.edges[e][storage_slot] == std::min(a, b) ? 0 : 1;
    };
    std::vector<std::pair<std::uint32_t, int>> ends;
    for (std::uint32_t e : K.vertex_edges[v]) {
        auto [a, b] = K.edges[e];
        if (a == b) {
            ends.push_back({e, 0});
            ends.push_back({e, 1});
        } else {
            ends.push_back({e, canonical_slot(e, a == v ? 0 : 1)});
        }
    }
    std::sort(ends.begin(), ends.end());
    std::map<std::pair<std::uint32_t, int>, std::size_t> index;
    for (std::size_t i = 0; i < ends.size(); ++i) index[ends[i]] = i;
    std::size_t n = ends.size();

    std::vector<std::uint32_t> cells_at_v;
    for (std::uint32_t c = 0; c < K.num_cells(); ++c) {
        for (auto [e, mult] : K.cell_edge_multiset(c)) {
            (void)mult;
            if (K.edges[e][0] == v || K.edges[e][1] == v) {
                cells_at_v.push_back(c);
                break;
            }
        }
    }

    pauli::GeneratorSet gens(n);
    for (std::uint32_t c : cells_at_v) {
        pauli::PauliWord w(n);
        for (auto [e, mult] : K.cell_edge_multiset(c)) {
            if (mult % 2 == 0) continue;
            auto [a, b] = K.edges[e];
            std::vector<std::size_t> hit;
            if (a == v && b == v) {
                hit = {index.at({e, 0}), index.at({e, 1})};
            } else if (a == v || b == v) {
                hit = {index.at({e, canonical_slot(e, a == v ? 0 : 1)})};
            }
            for (auto q : hit) {
                if (coloring.color[c] == CheckType::X)
                    w.x().flip(q);
                else
                    w.z().flip(q);
            }
        }
        gens.add(std::move(w), c);
    }
    return gens;
}

bool verify_check_group(const FusionNetwork& net) {
    pauli::GeneratorSet check_span(net.num_qubits);
    for (const Check& c : net.checks) {
        if (!pauli::in_span(net.resource_group, c.word)) return false;
        if (!pauli::in_span(net.fusion_group, c.word)) return false;
        check_span.add(c.word, c.cell);
    }
    auto rf = pauli::group_intersection(net.resource_group, net.fusion_group);
    return pauli::same_span(check_span, rf);
}

BoundaryState boundary_state(const FusionNetwork& net, const std::vector<std::uint8_t>& in_region) {
    const CellComplex& K = net.complex;
    if (in_region.size() != K.num_vertices) throw RegionError("region mask size mismatch");
    bool any = false;
    for (auto b : in_region) any |= b != 0;
    if (!any) throw RegionError("EmptyRegion");

    BoundaryState out;
    std::vector<char> is_boundary(net.num_qubits, 0);
    for (std::uint32_t e = 0; e < K.num_edges(); ++e) {
        auto [a, b] = K.edges[e];
        if (in_region[a] == in_region[b]) continue;
        std::uint32_t vin = in_region[a] ? a : b;
        std::uint32_t q = net.qubit_at(e, vin);
        is_boundary[q] = 1;
        out.boundary_qubits.push_back(q);
    }
    std::sort(out.boundary_qubits.begin(), out.boundary_qubits.end());

    for (const Check& ck : net.checks) {
        Check r;
        r.cell = ck.cell;
        r.type = ck.type;
        r.word = pauli::PauliWord(net.num_qubits);
        bool nontrivial = false;
        for (std::uint32_t e : ck.support) {
            for (int slot = 0; slot < 2; ++slot) {
                std::uint32_t q = net.qubit(e, slot);
                if (!is_boundary[q]) continue;
                nontrivial = true;
                if (ck.type == CheckType::X)
                    r.word.set_x(q);
                else
                    r.word.set_z(q);
            }
            auto [a, b] = K.edges[e];
            if (in_region[a] != in_region[b]) r.support.push_back(e);
        }
        if (nontrivial) out.checks.push_back(std::move(r));
    }
    return out;
}

}  // namespace ftc::fbqc
