#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "ftc/chambers.hpp"
#include "ftc/complex.hpp"

// Medial construction and region boundary membranes.

namespace ftc {

CellComplex medial_plaquette(const CellComplex& M) {
    if (M.dim != 2) throw NotAClosedSurface("medial: input must be a 2d complex");
    ChamberSystem cs;
    try {
        cs = build_chambers(M);
    } catch (const ChamberError& e) {
        throw NotAClosedSurface(std::string("medial: ") + e.what());
    }

    // Corners of M are the s1 pairs; each becomes an edge of the medial
    // complex between the two edge-vertices it joins.
    const std::size_t n = cs.size;
    std::vector<std::uint32_t> corner_id(n, UINT32_MAX);
    std::vector<std::array<std::uint32_t, 2>> corner_ch;  // chamber per end slot
    for (std::uint32_t c = 0; c < n; ++c) {
        if (corner_id[c] != UINT32_MAX) continue;
        std::uint32_t d = cs.s[1][c];
        std::uint32_t id = static_cast<std::uint32_t>(corner_ch.size());
        corner_id[c] = corner_id[d] = id;
        corner_ch.push_back({std::min(c, d), std::max(c, d)});
    }

    CellComplex P;
    P.dim = 2;
    P.name = "medial(" + M.name + ")";
    P.num_vertices = M.num_edges();
    P.edges.resize(corner_ch.size());
    for (std::uint32_t k = 0; k < corner_ch.size(); ++k)
        P.edges[k] = {cs.element[1][corner_ch[k][0]], cs.element[1][corner_ch[k][1]]};

    auto dir_through = [&](std::uint32_t tail_chamber) {
        std::uint32_t k = corner_id[tail_chamber];
        return DirEdge{k, corner_ch[k][0] != tail_chamber};
    };

    // One medial face per face of M (walk s1.s0) and one per vertex link
    // of M (walk s1.s2).
    for (std::uint32_t f = 0; f < M.num_faces(); ++f) {
        std::uint32_t start = UINT32_MAX;
        for (std::uint32_t c = 0; c < n; ++c)
            if (cs.element[2][c] == f) { start = c; break; }
        std::vector<DirEdge> cyc;
        std::uint32_t ch = start;
        do {
            cyc.push_back(dir_through(ch));
            ch = cs.s[0][cs.s[1][ch]];
        } while (ch != start);
        P.faces.push_back(std::move(cyc));
    }
    std::vector<char> used(n, 0);
    for (std::uint32_t c0 = 0; c0 < n; ++c0) {
        if (used[c0]) continue;
        // orbit of (s2.s1) through c0: corners around one vertex
        std::vector<DirEdge> cyc;
        std::uint32_t ch = c0;
        do {
            used[ch] = 1;
            used[cs.s[1][ch]] = 1;
            cyc.push_back(dir_through(ch));
            ch = cs.s[2][cs.s[1][ch]];
        } while (ch != c0);
        P.faces.push_back(std::move(cyc));
    }

    P.finalize();
    return P;
}

CellComplex boundary_membrane(const CellComplex& K, const std::vector<std::uint8_t>& in_region) {
    if (in_region.size() != K.num_vertices)
        throw RegionError("region mask size mismatch");
    std::size_t inside = 0;
    for (auto b : in_region) inside += b ? 1 : 0;
    if (inside == 0) throw RegionError("EmptyRegion");
    if (inside == K.num_vertices) throw RegionError("FullRegion");

    std::vector<std::uint32_t> cut = cut_edges(K, in_region);
    std::vector<std::int64_t> cut_index(K.num_edges(), -1);
    for (std::size_t i = 0; i < cut.size(); ++i) cut_index[cut[i]] = static_cast<std::int64_t>(i);

    // Membrane edges: per face, pair the cut positions along the cycle so
    // that each pair encloses an arc of in-region vertices.
    struct MemEdge {
        std::uint32_t face;
        std::uint32_t e_enter, e_leave;  // cut edges of the pair
    };
    std::vector<MemEdge> medges;
    // (face, position) -> membrane edge id
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> pos_edge;
    for (std::uint32_t f = 0; f < K.num_faces(); ++f) {
        const auto& cyc = K.faces[f];
        std::vector<std::uint32_t> cuts;
        for (std::uint32_t i = 0; i < cyc.size(); ++i)
            if (cut_index[cyc[i].edge] >= 0) cuts.push_back(i);
        if (cuts.empty()) continue;
        for (std::size_t j = 0; j < cuts.size(); ++j) {
            std::uint32_t i = cuts[j];
            DirEdge d = cyc[i];
            bool entering = !in_region[K.edge_tail(d)] && in_region[K.edge_head(d)];
            if (!entering) continue;
            std::uint32_t i2 = cuts[(j + 1) % cuts.size()];
            std::uint32_t id = static_cast<std::uint32_t>(medges.size());
            medges.push_back({f, cyc[i].edge, cyc[i2].edge});
            pos_edge[{f, i}] = id;
            pos_edge[{f, i2}] = id;
        }
    }

    // Membrane vertices: connected groups of cut edges within each cell.
    ChamberSystem cs = build_chambers(K);
    auto rotations = edge_rotations(K, cs);

    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> cell_cut_node;
    auto node_of = [&](std::uint32_t cell, std::uint32_t e) {
        auto key = std::make_pair(cell, e);
        auto it = cell_cut_node.find(key);
        if (it != cell_cut_node.end()) return it->second;
        std::uint32_t id = static_cast<std::uint32_t>(cell_cut_node.size());
        cell_cut_node.emplace(key, id);
        return id;
    };
    // First pass: register nodes and unions.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> unions;
    for (const MemEdge& m : medges) {
        for (std::uint32_t cell : K.face_cells[m.face]) {
            std::uint32_t a = node_of(cell, m.e_enter);
            std::uint32_t b = node_of(cell, m.e_leave);
            unions.push_back({a, b});
        }
    }
    std::vector<std::uint32_t> uf(cell_cut_node.size());
    std::iota(uf.begin(), uf.end(), 0u);
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (auto [a, b] : unions) {
        a = find(a);
        b = find(b);
        if (a != b) uf[std::max(a, b)] = std::min(a, b);
    }
    std::map<std::uint32_t, std::uint32_t> root_vertex;
    auto vertex_of = [&](std::uint32_t cell, std::uint32_t e) {
        std::uint32_t r = find(cell_cut_node.at({cell, e}));
        auto it = root_vertex.find(r);
        if (it != root_vertex.end()) return it->second;
        std::uint32_t id = static_cast<std::uint32_t>(root_vertex.size());
        root_vertex.emplace(r, id);
        return id;
    };

    CellComplex mem;
    mem.dim = 2;
    mem.name = "membrane(" + K.name + ")";
    mem.edges.resize(medges.size());
    std::vector<bool> edge_set(medges.size(), false);

    // Membrane faces: one quadrilateral (k-gon) per cut edge, following the
    // rotation of faces around it.
    for (std::uint32_t e : cut) {
        const auto& rot = rotations[e];
        const std::size_t k = rot.size();
        std::vector<std::uint32_t> side_edge(k);
        std::vector<std::uint32_t> side_vertex(k);  // vertex after side i
        for (std::size_t i = 0; i < k; ++i) {
            std::uint32_t f = rot[i].face;
            std::uint32_t pos = cs.face_pos[rot[i].chamber];
            side_edge[i] = pos_edge.at({f, pos});
            side_vertex[i] = vertex_of(rot[i].cell, e);
        }
        std::vector<DirEdge> cyc(k);
        for (std::size_t i = 0; i < k; ++i) {
            std::uint32_t tail = side_vertex[(i + k - 1) % k];
            std::uint32_t head = side_vertex[i];
            std::uint32_t me = side_edge[i];
            if (!edge_set[me]) {
                mem.edges[me] = {tail, head};
                edge_set[me] = true;
                cyc[i] = {me, false};
            } else {
                cyc[i] = {me, mem.edges[me][0] != tail || mem.edges[me][1] != head
                                  ? true
                                  : false};
                // ambiguous only if tail==head; either direction closes the cycle
                if (mem.edges[me][0] == mem.edges[me][1]) cyc[i].rev = false;
            }
        }
        mem.faces.push_back(std::move(cyc));
    }
    mem.num_vertices = root_vertex.size();
    mem.finalize();
    return mem;
}

}  // namespace ftc
