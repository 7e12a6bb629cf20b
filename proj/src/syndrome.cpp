#include "ftc/syndrome.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "ftc/chambers.hpp"
#include "ftc/gf2.hpp"

namespace ftc::syn {

namespace {

// Cells around each edge, with multiplicity; 2 of each color for a valid
// fusion complex.
std::vector<std::vector<std::uint32_t>> edge_cells(const CellComplex& K) {
    std::vector<std::vector<std::uint32_t>> ec(K.num_edges());
    for (std::uint32_t c = 0; c < K.num_cells(); ++c)
        for (auto [e, mult] : K.cell_edge_multiset(c))
            for (std::uint32_t i = 0; i < mult; ++i) ec[e].push_back(c);
    return ec;
}

}  // namespace

std::vector<std::size_t> SyndromeGraph::degrees() const {
    std::vector<std::size_t> deg(num_checks, 0);
    for (const auto& e : edges) {
        deg[e.a]++;
        deg[e.b]++;
    }
    return deg;
}

std::pair<SyndromeGraph, SyndromeGraph> build_syndrome_graphs(const CellComplex& K,
                                                              const CellColoring& coloring) {
    if (!validate_fusion_complex(K).valid) throw InvalidComplex("not a fusion complex");
    if (!is_proper_cell_coloring(K, coloring)) throw InvalidComplex("improper coloring");

    SyndromeGraph gx, gz;
    gx.type = CheckType::X;
    gz.type = CheckType::Z;
    std::vector<std::uint32_t> check_id(K.num_cells());
    for (std::uint32_t c = 0; c < K.num_cells(); ++c) {
        if (coloring.color[c] == CheckType::X) {
            check_id[c] = static_cast<std::uint32_t>(gx.check_cell.size());
            gx.check_cell.push_back(c);
        } else {
            check_id[c] = static_cast<std::uint32_t>(gz.check_cell.size());
            gz.check_cell.push_back(c);
        }
    }
    gx.num_checks = gx.check_cell.size();
    gz.num_checks = gz.check_cell.size();

    auto ec = edge_cells(K);
    gx.edges.resize(K.num_edges());
    gz.edges.resize(K.num_edges());
    for (std::uint32_t e = 0; e < K.num_edges(); ++e) {
        std::vector<std::uint32_t> xs, zs;
        for (auto c : ec[e])
            (coloring.color[c] == CheckType::X ? xs : zs).push_back(c);
        if (xs.size() != 2 || zs.size() != 2)
            throw InvalidComplex("edge " + std::to_string(e) + " does not touch 2+2 colored cells");
        gx.edges[e] = {check_id[xs[0]], check_id[xs[1]], e};
        gz.edges[e] = {check_id[zs[0]], check_id[zs[1]], e};
    }
    return {std::move(gx), std::move(gz)};
}

std::string Profile::format() const {
    std::string out;
    for (auto [deg, count] : counts) {
        if (!out.empty()) out += "+";
        if (count > 1) out += std::to_string(count) + "×";
        out += std::to_string(deg);
    }
    return out;
}

std::pair<Profile, Profile> check_profiles(const CellComplex& K, const CellColoring& coloring) {
    (void)coloring;
    std::map<std::size_t, std::size_t> ccounts, rcounts;
    for (std::uint32_t c = 0; c < K.num_cells(); ++c) {
        std::size_t deg = 0;
        for (auto [e, mult] : K.cell_edge_multiset(c)) {
            (void)e;
            deg += mult;
        }
        ccounts[deg]++;
    }
    for (std::uint32_t v = 0; v < K.num_vertices; ++v) {
        std::size_t deg = 0;
        for (auto e : K.vertex_edges[v]) deg += K.edges[e][0] == K.edges[e][1] ? 2 : 1;
        rcounts[deg]++;
    }

    std::size_t units = 1;
    if (K.dims[0] > 0)
        units = static_cast<std::size_t>(K.dims[0]) * K.dims[1] * K.dims[2] *
                static_cast<std::size_t>(K.unit_multiplicity);
    auto divisible = [&](const std::map<std::size_t, std::size_t>& m) {
        for (auto [d, n] : m)
            if (n % units) return false;
        return true;
    };
    if (units == 0 || !divisible(ccounts) || !divisible(rcounts)) units = 1;

    Profile C, R;
    for (auto [d, n] : ccounts) C.counts[d] = n / units;
    for (auto [d, n] : rcounts) R.counts[d] = n / units;
    return {C, R};
}

// ---------------------------------------------------------------------------

namespace {

struct Embedding {
    std::array<int, 3> dims;
    // centroid per cell, unwrapped to the neighborhood of its first vertex
    std::vector<std::array<double, 3>> cell_pos;
};

Embedding cell_centroids(const CellComplex& K) {
    if (K.embedding.empty() || K.dims[0] <= 0)
        throw HomologyRankUnexpected("complex carries no embedding; cannot orient membranes");
    Embedding E;
    E.dims = K.dims;
    E.cell_pos.resize(K.num_cells());
    for (std::uint32_t c = 0; c < K.num_cells(); ++c) {
        std::vector<std::uint32_t> vs;
        for (auto f : K.cells[c])
            for (DirEdge d : K.faces[f]) {
                vs.push_back(K.edge_tail(d));
                vs.push_back(K.edge_head(d));
            }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        auto base = K.embedding[vs[0]];
        std::array<double, 3> acc{0, 0, 0};
        for (auto v : vs) {
            for (int i = 0; i < 3; ++i) {
                double d = K.embedding[v][i] - base[i];
                double L = E.dims[i];
                d -= L * std::round(d / L);
                acc[i] += base[i] + d;
            }
        }
        for (int i = 0; i < 3; ++i) E.cell_pos[c][i] = acc[i] / vs.size();
    }
    return E;
}

std::array<double, 3> nearest_delta(const Embedding& E, std::uint32_t from, std::uint32_t to) {
    std::array<double, 3> d;
    for (int i = 0; i < 3; ++i) {
        double raw = E.cell_pos[to][i] - E.cell_pos[from][i];
        double L = E.dims[i];
        d[i] = raw - L * std::round(raw / L);
    }
    return d;
}

}  // namespace

TestCycles wrap_cycles(const CellComplex& K, const SyndromeGraph& g) {
    Embedding E = cell_centroids(K);
    const std::size_t n = g.num_checks;

    // adjacency
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj(n);  // (to, edge)
    for (std::uint32_t e = 0; e < g.edges.size(); ++e) {
        auto [a, b, ce] = g.edges[e];
        (void)ce;
        if (a == b) continue;
        adj[a].push_back({b, e});
        adj[b].push_back({a, e});
    }

    std::vector<std::int64_t> parent_edge(n, -1);
    std::vector<std::uint32_t> parent(n, 0);
    std::vector<std::array<double, 3>> lift(n);
    std::vector<char> seen(n, 0);

    struct Candidate {
        std::array<int, 3> w;
        std::vector<std::uint32_t> edges;
    };
    std::vector<Candidate> basis;
    std::array<int, 3> rowmask{0, 0, 0};  // achieved bits, per elimination row

    auto path_to_root = [&](std::uint32_t v, std::map<std::uint32_t, int>& acc) {
        while (parent_edge[v] >= 0) {
            acc[static_cast<std::uint32_t>(parent_edge[v])] ^= 1;
            v = parent[v];
        }
    };

    auto try_add = [&](Candidate cand) {
        // eliminate cand.w (mod 2) against current basis
        std::array<int, 3> w{cand.w[0] & 1, cand.w[1] & 1, cand.w[2] & 1};
        for (std::size_t i = 0; i < basis.size(); ++i) {
            int pivot = rowmask[i];
            if (w[pivot]) {
                for (int k = 0; k < 3; ++k) w[k] ^= basis[i].w[k] & 1;
                // symmetric difference of edge sets
                std::map<std::uint32_t, int> acc;
                for (auto e : cand.edges) acc[e] ^= 1;
                for (auto e : basis[i].edges) acc[e] ^= 1;
                cand.edges.clear();
                for (auto [e, p] : acc)
                    if (p) cand.edges.push_back(e);
                for (int k = 0; k < 3; ++k) cand.w[k] += basis[i].w[k];
            }
        }
        int pivot = -1;
        for (int k = 0; k < 3; ++k)
            if (w[k]) { pivot = k; break; }
        if (pivot < 0) return;
        cand.w = {w[0], w[1], w[2]};
        rowmask[basis.size()] = pivot;
        basis.push_back(std::move(cand));
    };

    for (std::uint32_t s = 0; s < n && basis.size() < 3; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        lift[s] = E.cell_pos[g.check_cell[s]];
        std::queue<std::uint32_t> q;
        q.push(s);
        while (!q.empty() && basis.size() < 3) {
            std::uint32_t u = q.front();
            q.pop();
            for (auto [v, e] : adj[u]) {
                auto d = nearest_delta(E, g.check_cell[u], g.check_cell[v]);
                if (!seen[v]) {
                    seen[v] = 1;
                    parent[v] = u;
                    parent_edge[v] = e;
                    for (int i = 0; i < 3; ++i) lift[v][i] = lift[u][i] + d[i];
                    q.push(v);
                } else {
                    std::array<int, 3> w;
                    bool integral = true;
                    for (int i = 0; i < 3; ++i) {
                        double raw = (lift[u][i] + d[i] - lift[v][i]) / E.dims[i];
                        w[i] = static_cast<int>(std::lround(raw));
                        if (std::abs(raw - w[i]) > 1e-6) integral = false;
                    }
                    if (!integral) continue;
                    if ((w[0] & 1) == 0 && (w[1] & 1) == 0 && (w[2] & 1) == 0)
                        continue;  // even winding: trivial mod 2
                    std::map<std::uint32_t, int> acc;
                    acc[e] ^= 1;
                    path_to_root(u, acc);
                    path_to_root(v, acc);
                    Candidate cand;
                    cand.w = w;
                    for (auto [ce, p] : acc)
                        if (p) cand.edges.push_back(ce);
                    try_add(std::move(cand));
                    if (basis.size() >= 3) break;
                }
            }
        }
    }
    if (basis.size() < 3)
        throw HomologyRankUnexpected("could not find three independent wrapping cycles");

    // Solve for combinations with winding e_x, e_y, e_z (mod 2).
    TestCycles out;
    for (int axis = 0; axis < 3; ++axis) {
        std::array<int, 3> want{axis == 0, axis == 1, axis == 2};
        std::map<std::uint32_t, int> acc;
        std::array<int, 3> w{0, 0, 0};
        std::array<int, 3> need = want;
        // basis rows are in echelon form over their pivots
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (need[rowmask[i]]) {
                for (int k = 0; k < 3; ++k) {
                    need[k] ^= basis[i].w[k] & 1;
                    w[k] += basis[i].w[k];
                }
                for (auto e : basis[i].edges) acc[e] ^= 1;
            }
        }
        if (need != std::array<int, 3>{0, 0, 0})
            throw HomologyRankUnexpected("wrap cycle solve failed");
        std::vector<std::uint32_t> edges;
        for (auto [e, p] : acc)
            if (p) edges.push_back(e);
        out.edge_sets.push_back(std::move(edges));
        out.windings[axis] = w;
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// Rows of the 2-cycle condition system: one row per (vertex, other-color
// cell) incidence, columns = complex edges. M is a membrane iff A M = 0.
struct CycleSystem {
    std::vector<std::vector<std::uint32_t>> rows;  // edge lists (already mod 2)
};

CycleSystem cycle_system(const CellComplex& K, const CellColoring& coloring, CheckType type,
                         const std::vector<std::vector<std::uint32_t>>& ec) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> rowmap;
    for (std::uint32_t e = 0; e < K.num_edges(); ++e) {
        std::vector<std::uint32_t> others;
        for (auto c : ec[e])
            if (coloring.color[c] != type) others.push_back(c);
        auto [v1, v2] = K.edges[e];
        // square boundary (v1,o1),(v1,o2),(v2,o1),(v2,o2) mod 2
        if (v1 == v2 || others[0] == others[1]) continue;
        for (auto v : {v1, v2})
            for (auto o : others) rowmap[{v, o}].push_back(e);
    }
    CycleSystem sys;
    for (auto& [k, v] : rowmap) sys.rows.push_back(std::move(v));
    return sys;
}

bool satisfies_cycles(const CycleSystem& sys, const std::vector<char>& in_m) {
    for (const auto& row : sys.rows) {
        int parity = 0;
        for (auto e : row) parity ^= in_m[e];
        if (parity) return false;
    }
    return true;
}

int overlap_parity(const std::vector<std::uint32_t>& a, const std::vector<char>& in_m) {
    int p = 0;
    for (auto e : a) p ^= in_m[e];
    return p;
}

const char* kClassNames[3] = {"yz", "zx", "xy"};

}  // namespace

std::vector<LogicalMembrane> logical_membranes(const CellComplex& K, const CellColoring& coloring,
                                               CheckType type) {
    auto [gx, gz] = build_syndrome_graphs(K, coloring);
    const SyndromeGraph& g = type == CheckType::X ? gx : gz;
    auto ec = edge_cells(K);
    auto sys = cycle_system(K, coloring, type, ec);
    auto cycles = wrap_cycles(K, g);

    const std::size_t ne = K.num_edges();
    std::vector<LogicalMembrane> out;

    auto pairing = [&](const std::vector<char>& in_m) {
        std::array<int, 3> p{};
        for (int i = 0; i < 3; ++i) p[i] = overlap_parity(cycles.edge_sets[i], in_m);
        return p;
    };

    auto emit = [&](int axis, const std::vector<char>& in_m) {
        LogicalMembrane m;
        m.type = type;
        m.homology_class = kClassNames[axis];
        for (std::uint32_t e = 0; e < ne; ++e)
            if (in_m[e]) m.edges.push_back(e);
        out.push_back(std::move(m));
    };

    // Geometric route: the cut of edges crossing a transverse torus plane
    // is a 2-cycle pairing diagonally with the wrap cycles.
    Embedding E = cell_centroids(K);
    bool geometric_ok = true;
    std::vector<std::vector<char>> cuts(3, std::vector<char>(ne, 0));
    for (int axis = 0; axis < 3 && geometric_ok; ++axis) {
        const double plane = 0.2526012601;  // fixed, avoids centroid ties
        std::vector<char>& in_m = cuts[axis];
        for (std::uint32_t e = 0; e < ne; ++e) {
            auto [a, b, ce] = g.edges[e];
            (void)ce;
            if (a == b) continue;
            auto d = nearest_delta(E, g.check_cell[a], g.check_cell[b]);
            double L = E.dims[axis];
            double rel = E.cell_pos[g.check_cell[a]][axis] - plane;
            rel -= L * std::floor(rel / L);  // now in [0, L)
            double end = rel + d[axis];
            if (end < 0 || end >= L) in_m[e] = 1;
        }
        if (!satisfies_cycles(sys, in_m)) {
            geometric_ok = false;
            break;
        }
        auto p = pairing(in_m);
        for (int k = 0; k < 3; ++k)
            if (p[k] != (k == axis ? 1 : 0)) geometric_ok = false;
    }
    if (geometric_ok) {
        for (int axis = 0; axis < 3; ++axis) emit(axis, cuts[axis]);
        return out;
    }

    // Algebraic route: kernel of the cycle system modulo check boundaries,
    // classified against the wrap cycles. Exact but dense.
    gf2::Matrix A;
    A.cols = ne;
    for (const auto& row : sys.rows) {
        BitVec r(ne);
        for (auto e : row) r.flip(e);
        A.add_row(std::move(r));
    }
    A.reduce();
    auto kernel = A.kernel();

    gf2::Matrix boundaries;
    boundaries.cols = ne;
    for (std::uint32_t c = 0; c < K.num_cells(); ++c) {
        if (coloring.color[c] != type) continue;
        BitVec r(ne);
        for (auto [e, mult] : K.cell_edge_multiset(c))
            if (mult % 2) r.flip(e);
        boundaries.add_row(std::move(r));
    }
    boundaries.reduce();

    // quotient rank must be 3 on the 3-torus
    {
        gf2::Matrix all = boundaries;
        for (const auto& v : kernel) all.add_row(v);
        all.reduce();
        if (all.rank() - boundaries.rank() != 3)
            throw HomologyRankUnexpected(
                "homology rank " + std::to_string(all.rank() - boundaries.rank()) +
                ", expected 3");
    }

    // Pick kernel combinations pairing as e_yz, e_zx, e_xy.
    std::vector<std::pair<std::array<int, 3>, BitVec>> red;  // echelon over pairing bits
    std::array<int, 3> pivots{-1, -1, -1};
    for (const auto& kvec : kernel) {
        std::vector<char> in_m(ne, 0);
        for (std::uint32_t e = 0; e < ne; ++e)
            if (kvec.get(e)) in_m[e] = 1;
        auto p = pairing(in_m);
        BitVec acc = kvec;
        for (std::size_t i = 0; i < red.size(); ++i) {
            int pv = -1;
            for (int k = 0; k < 3; ++k)
                if (red[i].first[k]) { pv = k; break; }
            if (pv >= 0 && p[pv]) {
                for (int k = 0; k < 3; ++k) p[k] ^= red[i].first[k];
                acc ^= red[i].second;
            }
        }
        if (p[0] || p[1] || p[2]) {
            red.push_back({p, acc});
            for (int k = 0; k < 3; ++k)
                if (p[k]) { pivots[k] = 1; break; }
        }
        if (red.size() == 3) break;
    }
    if (red.size() < 3) throw HomologyRankUnexpected("membranes do not span all wrap classes");

    for (int axis = 0; axis < 3; ++axis) {
        std::array<int, 3> need{axis == 0, axis == 1, axis == 2};
        BitVec acc(ne);
        for (std::size_t i = 0; i < red.size(); ++i) {
            int pv = -1;
            for (int k = 0; k < 3; ++k)
                if (red[i].first[k]) { pv = k; break; }
            if (pv >= 0 && need[pv]) {
                for (int k = 0; k < 3; ++k) need[k] ^= red[i].first[k];
                acc ^= red[i].second;
            }
        }
        if (need != std::array<int, 3>{0, 0, 0})
            throw HomologyRankUnexpected("membrane class solve failed");
        std::vector<char> in_m(ne, 0);
        for (std::uint32_t e = 0; e < ne; ++e)
            if (acc.get(e)) in_m[e] = 1;
        emit(axis, in_m);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

CellComplex direct_dual(const CellComplex& K) {
    ChamberSystem cs = build_chambers(K);
    auto rot = edge_rotations(K, cs);

    CellComplex D;
    D.dim = 3;
    D.name = "dual(" + K.name + ")";
    D.dims = K.dims;
    D.unit_multiplicity = K.unit_multiplicity;
    D.num_vertices = K.num_cells();
    D.edges.resize(K.num_faces());
    for (std::uint32_t f = 0; f < K.num_faces(); ++f) {
        auto& fc = K.face_cells[f];
        D.edges[f] = {fc[0], fc[1]};
    }
    D.faces.resize(K.num_edges());
    for (std::uint32_t e = 0; e < K.num_edges(); ++e) {
        const auto& wedges = rot[e];
        const std::size_t k = wedges.size();
        std::vector<DirEdge> cyc(k);
        for (std::size_t i = 0; i < k; ++i) {
            std::uint32_t tail = wedges[(i + k - 1) % k].cell;
            std::uint32_t de = wedges[i].face;
            bool rev = D.edges[de][0] != tail;
            if (D.edges[de][0] == D.edges[de][1]) rev = false;
            cyc[i] = {de, rev};
        }
        D.faces[e] = std::move(cyc);
    }
    D.cells.resize(K.num_vertices);
    for (std::uint32_t v = 0; v < K.num_vertices; ++v) {
        for (auto e : K.vertex_edges[v]) {
            D.cells[v].push_back(e);
            if (K.edges[e][0] == K.edges[e][1]) D.cells[v].push_back(e);
        }
        std::sort(D.cells[v].begin(), D.cells[v].end());
    }
    D.finalize();
    return D;
}

CellComplex homology_complex(const CellComplex& K, const CellColoring& coloring, CheckType type,
                             const std::vector<std::vector<std::uint32_t>>& ec) {
    // Vertices: other-color cells then complex vertices; faces: one square
    // per complex edge; cells: the type-colored checks.
    std::vector<std::uint32_t> other_node(K.num_cells(), UINT32_MAX);
    std::uint32_t nother = 0;
    for (std::uint32_t c = 0; c < K.num_cells(); ++c)
        if (coloring.color[c] != type) other_node[c] = nother++;

    CellComplex H;
    H.dim = 3;
    H.name = std::string(1, check_type_name(type)) + "-homology(" + K.name + ")";
    H.dims = K.dims;
    H.unit_multiplicity = K.unit_multiplicity;
    H.num_vertices = nother + K.num_vertices;

    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> edge_id;  // (onode, vnode)
    auto get_edge = [&](std::uint32_t onode, std::uint32_t vnode) {
        auto key = std::make_pair(onode, vnode);
        auto it = edge_id.find(key);
        if (it != edge_id.end()) return it->second;
        std::uint32_t id = static_cast<std::uint32_t>(H.edges.size());
        H.edges.push_back({onode, vnode});
        edge_id.emplace(key, id);
        return id;
    };

    H.faces.resize(K.num_edges());
    for (std::uint32_t e = 0; e < K.num_edges(); ++e) {
        std::vector<std::uint32_t> others;
        for (auto c : ec[e])
            if (coloring.color[c] != type) others.push_back(c);
        if (others.size() != 2) throw InvalidComplex("edge without two other-color cells");
        std::uint32_t v1 = nother + K.edges[e][0];
        std::uint32_t v2 = nother + K.edges[e][1];
        std::uint32_t o1 = other_node[others[0]], o2 = other_node[others[1]];
        // square v1 -> o1 -> v2 -> o2
        std::vector<DirEdge> cyc;
        cyc.push_back({get_edge(o1, v1), true});
        cyc.push_back({get_edge(o1, v2), false});
        cyc.push_back({get_edge(o2, v2), true});
        cyc.push_back({get_edge(o2, v1), false});
        H.faces[e] = std::move(cyc);
    }

    for (std::uint32_t c = 0; c < K.num_cells(); ++c) {
        if (coloring.color[c] != type) continue;
        std::vector<std::uint32_t> fs;
        for (auto [e, mult] : K.cell_edge_multiset(c))
            for (std::uint32_t i = 0; i < mult; ++i) fs.push_back(e);
        std::sort(fs.begin(), fs.end());
        H.cells.push_back(std::move(fs));
    }
    H.finalize();
    return H;
}

}  // namespace

TripletComplexes derive_triplet(const CellComplex& K, const CellColoring& coloring) {
    if (!validate_fusion_complex(K).valid) throw InvalidComplex("not a fusion complex");
    auto ec = edge_cells(K);
    TripletComplexes t;
    t.r_complex = direct_dual(K);
    t.x_complex = homology_complex(K, coloring, CheckType::X, ec);
    t.z_complex = homology_complex(K, coloring, CheckType::Z, ec);
    return t;
}

CellComplex reinterpret_as_fusion_complex(const TripletComplexes& t, char which) {
    const CellComplex* src = nullptr;
    switch (which) {
        case 'R': src = &t.r_complex; break;
        case 'X': src = &t.x_complex; break;
        case 'Z': src = &t.z_complex; break;
        default: throw std::invalid_argument("which must be R, X or Z");
    }
    CellComplex F = dualize(*src);
    F.name = std::string("fusion-complex(") + which + "," + src->name + ")";
    return F;
}

}  // namespace ftc::syn
