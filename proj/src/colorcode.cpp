#include "ftc/colorcode.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ftc::color {

std::optional<VertexColoring> find_vertex_3coloring(const CellComplex& K, long long node_budget) {
    const std::size_t n = K.num_vertices;
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (const auto& e : K.edges) {
        if (e[0] == e[1]) return std::nullopt;  // self-loop: no proper coloring
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }

    // BFS order keeps early conflicts early; first use of a new color is
    // forced to the smallest unused one to prune color permutations.
    std::vector<std::uint32_t> order;
    std::vector<char> seen(n, 0);
    for (std::uint32_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        order.push_back(s);
        for (std::size_t h = order.size() - 1; h < order.size(); ++h) {
            for (auto w : adj[order[h]]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
            }
        }
    }

    std::vector<std::int8_t> color(n, -1);
    long long nodes = 0;
    std::function<bool(std::size_t, int)> go = [&](std::size_t i, int used) -> bool {
        if (i == order.size()) return true;
        if (++nodes > node_budget) throw std::overflow_error("budget");
        std::uint32_t v = order[i];
        int limit = std::min(3, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (auto w : adj[v])
                if (color[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = static_cast<std::int8_t>(c);
            if (go(i + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    try {
        if (!go(0, 0)) return std::nullopt;
    } catch (const std::overflow_error&) {
        return std::nullopt;  // budget exhausted; caller reports undecided
    }
    VertexColoring out;
    out.color.assign(color.begin(), color.end());
    return out;
}

bool is_proper_3coloring(const CellComplex& K, const VertexColoring& col) {
    if (col.color.size() != K.num_vertices) return false;
    for (auto c : col.color)
        if (c > 2) return false;
    for (const auto& e : K.edges)
        if (e[0] == e[1] || col.color[e[0]] == col.color[e[1]]) return false;
    return true;
}

ValidationReport validate_color_complex(const CellComplex& K) {
    ValidationReport rep;
    if (K.dim != 3) {
        rep.fail("color-complex", -1, "not a 3d complex");
        return rep;
    }
    for (std::uint32_t f = 0; f < K.num_faces(); ++f) {
        if (K.faces[f].size() != 3)
            rep.fail("triangulated-2-skeleton", f,
                     "face has " + std::to_string(K.faces[f].size()) + " sides, expected 3");
    }
    long long budget = K.num_vertices <= 64 * 64 ? 50'000'000 : 2'000'000;
    auto col = find_vertex_3coloring(K, budget);
    if (!col) {
        rep.fail("vertex-3-coloring", -1, "no proper 3-coloring found");
        if (K.num_vertices > 64 * 64)
            rep.notes.push_back("3-coloring search budget-limited; result may be Undecided");
    }
    return rep;
}

ColorNetwork build_color_network(const CellComplex& K, const VertexColoring& coloring) {
    for (std::uint32_t f = 0; f < K.num_faces(); ++f)
        if (K.faces[f].size() != 3) throw InvalidColorComplex("2-skeleton is not a triangulation");
    if (!is_proper_3coloring(K, coloring))
        throw InvalidColorComplex("vertex coloring is not a proper 3-coloring");
    for (std::uint32_t f = 0; f < K.num_faces(); ++f)
        if (K.face_cells[f].size() != 2) throw InvalidColorComplex("complex is not closed");

    ColorNetwork net;
    net.complex = K;
    net.coloring = coloring;
    net.num_qubits = 2 * K.num_faces();

    net.fusion_group = pauli::GeneratorSet(net.num_qubits);
    for (std::uint32_t f = 0; f < K.num_faces(); ++f) {
        pauli::PauliWord xx(net.num_qubits), zz(net.num_qubits);
        xx.set_x(2 * f);
        xx.set_x(2 * f + 1);
        zz.set_z(2 * f);
        zz.set_z(2 * f + 1);
        net.fusion_group.add(std::move(xx), f);
        net.fusion_group.add(std::move(zz), f);
    }

    // Resource state on each 3-cell: for every vertex of the cell, an
    // X-type and a Z-type stabilizer on the incident faces of that cell.
    net.resource_group = pauli::GeneratorSet(net.num_qubits);
    for (std::uint32_t c = 0; c < K.num_cells(); ++c) {
        std::map<std::uint32_t, std::vector<std::uint32_t>> at_vertex;  // vertex -> qubits
        for (std::uint32_t slot = 0; slot < K.cells[c].size(); ++slot) {
            std::uint32_t f = K.cells[c][slot];
            int side;
            if (K.face_cells[f][0] == K.face_cells[f][1]) {
                // face listed twice by the same cell: slot order picks sides
                std::uint32_t earlier = 0;
                for (std::uint32_t s2 = 0; s2 < slot; ++s2)
                    if (K.cells[c][s2] == f) ++earlier;
                side = static_cast<int>(earlier);
            } else {
                side = K.face_cells[f][0] == c ? 0 : 1;
            }
            for (auto v : K.face_vertices(f)) at_vertex[v].push_back(net.qubit(f, side));
        }
        for (auto& [v, qubits] : at_vertex) {
            pauli::PauliWord wx(net.num_qubits), wz(net.num_qubits);
            for (auto q : qubits) {
                wx.set_x(q);
                wz.set_z(q);
            }
            net.resource_group.add(std::move(wx), static_cast<std::int64_t>(c));
            net.resource_group.add(std::move(wz), static_cast<std::int64_t>(c));
        }
    }

    // Checks: X and Z per vertex, on all incident faces (both qubits).
    std::vector<std::vector<std::uint32_t>> vertex_faces(K.num_vertices);
    for (std::uint32_t f = 0; f < K.num_faces(); ++f)
        for (auto v : K.face_vertices(f)) vertex_faces[v].push_back(f);
    for (std::uint32_t v = 0; v < K.num_vertices; ++v) {
        for (CheckType t : {CheckType::X, CheckType::Z}) {
            fbqc::Check ck;
            ck.cell = v;  // provenance: the 0-cell
            ck.type = t;
            ck.word = pauli::PauliWord(net.num_qubits);
            for (auto f : vertex_faces[v]) {
                ck.support.push_back(f);
                for (int s = 0; s < 2; ++s) {
                    if (t == CheckType::X)
                        ck.word.set_x(net.qubit(f, s));
                    else
                        ck.word.set_z(net.qubit(f, s));
                }
            }
            net.checks.push_back(std::move(ck));
        }
    }
    return net;
}

bool verify_color_network(const ColorNetwork& net) {
    for (const auto& ck : net.checks) {
        if (!pauli::in_span(net.resource_group, ck.word)) return false;
        if (!pauli::in_span(net.fusion_group, ck.word)) return false;
    }
    // per-cell stabilizers pairwise commute
    std::map<std::int64_t, std::vector<std::size_t>> per_cell;
    for (std::size_t i = 0; i < net.resource_group.size(); ++i)
        per_cell[net.resource_group.labels()[i]].push_back(i);
    for (auto& [c, idx] : per_cell) {
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = i + 1; j < idx.size(); ++j)
                if (!pauli::commutes(net.resource_group[idx[i]], net.resource_group[idx[j]]))
                    return false;
    }
    return true;
}

}  // namespace ftc::color
