#include "ftc/chambers.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ftc {

namespace {

struct DSU {
    std::vector<std::uint32_t> p;
    explicit DSU(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

ChamberSystem build_chambers(const CellComplex& K) {
    ChamberSystem cs;
    cs.dim = K.dim;

    // Chambers are enumerated per (cell, face-slot, position, side) for 3d
    // complexes, per (face, position, side) for 2d ones.
    struct Block {
        std::uint32_t cell, slot, face;
        std::size_t base;
    };
    std::vector<Block> blocks;
    std::size_t total = 0;
    if (K.dim == 3) {
        for (std::uint32_t c = 0; c < K.num_cells(); ++c)
            for (std::uint32_t t = 0; t < K.cells[c].size(); ++t) {
                std::uint32_t f = K.cells[c][t];
                blocks.push_back({c, t, f, total});
                total += 2 * K.faces[f].size();
            }
    } else {
        for (std::uint32_t f = 0; f < K.num_faces(); ++f) {
            blocks.push_back({0, 0, f, total});
            total += 2 * K.faces[f].size();
        }
    }
    cs.size = total;
    for (int r = 0; r <= K.dim; ++r) cs.element[r].resize(total);
    for (int i = 0; i <= K.dim; ++i) cs.s[i].assign(total, 0);
    cs.face_pos.resize(total);

    // Per-face list of (block, for 3d: the two cell occurrences).
    std::vector<std::vector<std::uint32_t>> face_blocks(K.num_faces());
    for (std::uint32_t b = 0; b < blocks.size(); ++b) face_blocks[blocks[b].face].push_back(b);

    // s2 pairing buckets for 3d: within a cell, key (edge, physical end).
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, std::vector<std::size_t>>
        cell_edge_end;
    // s2 pairing buckets for 2d: global key (edge, physical end).
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::size_t>> edge_end;

    for (const Block& b : blocks) {
        const auto& cyc = K.faces[b.face];
        const std::size_t len = cyc.size();
        for (std::size_t i = 0; i < len; ++i) {
            DirEdge d = cyc[i];
            for (int side = 0; side < 2; ++side) {
                std::size_t ch = b.base + 2 * i + side;
                cs.element[0][ch] = side == 0 ? K.edge_tail(d) : K.edge_head(d);
                cs.element[1][ch] = d.edge;
                cs.element[2][ch] = b.face;
                if (K.dim == 3) cs.element[3][ch] = b.cell;
                cs.face_pos[ch] = static_cast<std::uint32_t>(i);
                // s0: swap side within the same edge occurrence
                cs.s[0][ch] = static_cast<std::uint32_t>(b.base + 2 * i + (1 - side));
                // s1: join consecutive occurrences at the shared corner
                if (side == 1)
                    cs.s[1][ch] = static_cast<std::uint32_t>(b.base + 2 * ((i + 1) % len));
                else
                    cs.s[1][ch] = static_cast<std::uint32_t>(b.base + 2 * ((i + len - 1) % len) + 1);
                // physical end of the edge (independent of traversal direction)
                std::uint32_t p = static_cast<std::uint32_t>(side) ^ (d.rev ? 1u : 0u);
                if (K.dim == 3)
                    cell_edge_end[{b.cell, d.edge, p}].push_back(ch);
                else
                    edge_end[{d.edge, p}].push_back(ch);
            }
        }
    }

    if (K.dim == 3) {
        for (auto& [key, v] : cell_edge_end) {
            if (v.size() != 2)
                throw ChamberError(
                    "cell surface ambiguous or open: edge " + std::to_string(std::get<1>(key)) +
                    " occurs " + std::to_string(v.size()) + " times in cell " +
                    std::to_string(std::get<0>(key)));
            cs.s[2][v[0]] = static_cast<std::uint32_t>(v[1]);
            cs.s[2][v[1]] = static_cast<std::uint32_t>(v[0]);
        }
        for (std::uint32_t f = 0; f < K.num_faces(); ++f) {
            if (face_blocks[f].size() != 2)
                throw ChamberError("complex not closed: face " + std::to_string(f) + " lies in " +
                                   std::to_string(face_blocks[f].size()) + " cell slots");
            const Block& a = blocks[face_blocks[f][0]];
            const Block& b = blocks[face_blocks[f][1]];
            for (std::size_t j = 0; j < 2 * K.faces[f].size(); ++j) {
                cs.s[3][a.base + j] = static_cast<std::uint32_t>(b.base + j);
                cs.s[3][b.base + j] = static_cast<std::uint32_t>(a.base + j);
            }
        }
    } else {
        for (auto& [key, v] : edge_end) {
            if (v.size() != 2)
                throw ChamberError("surface not closed: edge " + std::to_string(key.first) +
                                   " has " + std::to_string(v.size()) + " flag ends");
            cs.s[2][v[0]] = static_cast<std::uint32_t>(v[1]);
            cs.s[2][v[1]] = static_cast<std::uint32_t>(v[0]);
        }
    }

    cs.element_count[0] = K.num_vertices;
    cs.element_count[1] = K.num_edges();
    cs.element_count[2] = K.num_faces();
    cs.element_count[3] = K.dim == 3 ? K.num_cells() : 0;
    return cs;
}

std::vector<std::uint32_t> canonical_certificate(const ChamberSystem& cs) {
    const int ninv = cs.dim + 1;
    const std::size_t n = cs.size;
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> idx(n), order;
    order.reserve(n);

    for (std::uint32_t seed = 0; seed < n; ++seed) {
        std::fill(idx.begin(), idx.end(), UINT32_MAX);
        order.clear();
        idx[seed] = 0;
        order.push_back(seed);
        std::vector<std::uint32_t> code;
        code.reserve(n * ninv + 1);
        code.push_back(static_cast<std::uint32_t>(n));
        bool worse = false;
        std::size_t emitted = 1;
        for (std::size_t q = 0; q < order.size() && !worse; ++q) {
            std::uint32_t ch = order[q];
            for (int k = 0; k < ninv; ++k) {
                std::uint32_t nb = cs.s[k][ch];
                if (idx[nb] == UINT32_MAX) {
                    idx[nb] = static_cast<std::uint32_t>(order.size());
                    order.push_back(nb);
                }
                code.push_back(idx[nb]);
                if (!best.empty()) {
                    if (code[emitted] > best[emitted]) { worse = true; break; }
                    if (code[emitted] < best[emitted]) best.clear();  // current is better
                }
                ++emitted;
            }
        }
        if (worse) continue;
        if (order.size() != n)
            throw ChamberError("chamber graph is disconnected; canonical form undefined");
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

bool isomorphic(const CellComplex& A, const CellComplex& B) {
    if (A.dim != B.dim || A.num_vertices != B.num_vertices || A.num_edges() != B.num_edges() ||
        A.num_faces() != B.num_faces() || A.num_cells() != B.num_cells())
        return false;
    ChamberSystem ca = build_chambers(A), cb = build_chambers(B);
    if (ca.size != cb.size) return false;
    return canonical_certificate(ca) == canonical_certificate(cb);
}

CellComplex extract_complex(const ChamberSystem& cs) {
    const int D = cs.dim;
    const std::size_t n = cs.size;

    // Orbits of chambers under all involutions except s_r give rank-r elements.
    auto orbit_ids = [&](std::vector<int> gens) {
        DSU d(n);
        for (int g : gens)
            for (std::uint32_t c = 0; c < n; ++c) d.unite(c, cs.s[g][c]);
        std::vector<std::uint32_t> id(n, UINT32_MAX);
        std::uint32_t next = 0;
        for (std::uint32_t c = 0; c < n; ++c) {
            std::uint32_t r = d.find(c);
            if (id[r] == UINT32_MAX) id[r] = next++;
            id[c] = id[r];
        }
        return std::pair{id, next};
    };

    std::vector<int> all(D + 1);
    std::iota(all.begin(), all.end(), 0);
    auto gens_except = [&](int r) {
        std::vector<int> g;
        for (int i = 0; i <= D; ++i)
            if (i != r) g.push_back(i);
        return g;
    };

    auto [vid, nv] = orbit_ids(gens_except(0));
    auto [eid, ne] = orbit_ids(gens_except(1));
    auto [fid, nf] = orbit_ids(gens_except(2));
    std::vector<std::uint32_t> cid;
    std::size_t nc = 0;
    if (D == 3) {
        auto [c_, n_] = orbit_ids(gens_except(3));
        cid = c_;
        nc = n_;
    }

    // Edge ends: orbits under the involutions fixing vertex and edge.
    auto [endid, nend] = orbit_ids(D == 3 ? std::vector<int>{2, 3} : std::vector<int>{2});

    CellComplex out;
    out.dim = D;
    out.num_vertices = nv;

    // Edge endpoints: the two end-orbits, ordered by minimal chamber.
    std::vector<std::array<std::uint32_t, 2>> edge_ends(ne, {UINT32_MAX, UINT32_MAX});
    std::vector<std::uint32_t> end_vertex(nend);
    std::vector<std::uint32_t> end_min(nend, UINT32_MAX);
    for (std::uint32_t c = 0; c < n; ++c) {
        end_vertex[endid[c]] = vid[c];
        end_min[endid[c]] = std::min(end_min[endid[c]], c);
    }
    for (std::uint32_t c = 0; c < n; ++c) {
        auto& ends = edge_ends[eid[c]];
        std::uint32_t ep = endid[c];
        if (ends[0] == ep || ends[1] == ep) continue;
        if (ends[0] == UINT32_MAX)
            ends[0] = ep;
        else if (ends[1] == UINT32_MAX)
            ends[1] = ep;
        else
            throw ChamberError("edge with more than two ends");
    }
    out.edges.resize(ne);
    for (std::uint32_t e = 0; e < ne; ++e) {
        auto ends = edge_ends[e];
        if (ends[1] == UINT32_MAX) ends[1] = ends[0];  // degenerate single-end edge
        if (end_min[ends[1]] < end_min[ends[0]]) std::swap(ends[0], ends[1]);
        edge_ends[e] = ends;
        out.edges[e] = {end_vertex[ends[0]], end_vertex[ends[1]]};
    }

    // Face cycles: walk s0/s1 from the minimal chamber of each face orbit.
    std::vector<std::uint32_t> face_min(nf, UINT32_MAX);
    for (std::uint32_t c = 0; c < n; ++c) face_min[fid[c]] = std::min(face_min[fid[c]], c);
    out.faces.resize(nf);
    for (std::uint32_t f = 0; f < nf; ++f) {
        std::uint32_t start = face_min[f];
        std::vector<DirEdge> cyc;
        std::uint32_t ch = start;
        do {
            std::uint32_t e = eid[ch];
            bool rev = endid[ch] != edge_ends[e][0];
            cyc.push_back({e, rev});
            ch = cs.s[1][cs.s[0][ch]];
        } while (ch != start);
        out.faces[f] = std::move(cyc);
    }

    if (D == 3) {
        // Cell face multisets: face-slot suborbits inside each cell orbit.
        DSU slots(n);
        for (int g : {0, 1})
            for (std::uint32_t c = 0; c < n; ++c) slots.unite(c, cs.s[g][c]);
        std::vector<std::vector<std::uint32_t>> cells(nc);
        std::vector<char> seen(n, 0);
        for (std::uint32_t c = 0; c < n; ++c) {
            std::uint32_t r = slots.find(c);
            if (seen[r]) continue;
            seen[r] = 1;
            cells[cid[c]].push_back(fid[c]);
        }
        for (auto& cset : cells) std::sort(cset.begin(), cset.end());
        out.cells = std::move(cells);
    }

    out.finalize();
    return out;
}

CellComplex dualize(const CellComplex& K) {
    ChamberSystem cs = build_chambers(K);
    ChamberSystem rev;
    rev.dim = cs.dim;
    rev.size = cs.size;
    rev.face_pos.assign(cs.size, 0);  // recomputed on extraction; unused
    for (int i = 0; i <= cs.dim; ++i) {
        rev.s[i] = cs.s[cs.dim - i];
        rev.element[i] = cs.element[cs.dim - i];
        rev.element_count[i] = cs.element_count[cs.dim - i];
    }
    CellComplex D = extract_complex(rev);
    D.name = "dual(" + K.name + ")";
    D.dims = K.dims;
    D.unit_multiplicity = K.unit_multiplicity;
    return D;
}

std::vector<std::vector<EdgeWedge>> edge_rotations(const CellComplex& K,
                                                   const ChamberSystem& cs) {
    std::vector<std::vector<EdgeWedge>> rot(K.num_edges());
    std::vector<std::uint32_t> start(K.num_edges(), UINT32_MAX);
    for (std::uint32_t c = 0; c < cs.size; ++c)
        start[cs.element[1][c]] = std::min(start[cs.element[1][c]], c);
    for (std::uint32_t e = 0; e < K.num_edges(); ++e) {
        std::uint32_t ch = start[e];
        std::vector<EdgeWedge> wedges;
        do {
            wedges.push_back({cs.element[2][ch], ch, cs.element[3][ch]});
            ch = cs.s[3][cs.s[2][ch]];
        } while (ch != start[e]);
        if (wedges.size() != K.edge_faces[e].size())
            throw ChamberError("edge link disconnected at edge " + std::to_string(e));
        rot[e] = std::move(wedges);
    }
    return rot;
}

}  // namespace ftc
