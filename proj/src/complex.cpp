#include "ftc/complex.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace ftc {

std::vector<std::uint32_t> CellComplex::face_vertices(std::uint32_t f) const {
    std::vector<std::uint32_t> vs;
    vs.reserve(faces[f].size());
    for (DirEdge d : faces[f]) vs.push_back(edge_tail(d));
    return vs;
}

void CellComplex::finalize() {
    for (const auto& e : edges) {
        if (e[0] >= num_vertices || e[1] >= num_vertices)
            throw MalformedComplex("edge endpoint out of range");
    }
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& cyc = faces[f];
        if (cyc.empty()) throw MalformedComplex("empty face cycle");
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (cyc[i].edge >= edges.size())
                throw MalformedComplex("face references missing edge");
            DirEdge cur = cyc[i];
            DirEdge nxt = cyc[(i + 1) % cyc.size()];
            if (edge_head(cur) != edge_tail(nxt))
                throw MalformedComplex("face cycle not closed at face " + std::to_string(f));
        }
    }
    for (const auto& c : cells) {
        for (auto f : c)
            if (f >= faces.size()) throw MalformedComplex("cell references missing face");
    }

    vertex_edges.assign(num_vertices, {});
    for (std::uint32_t e = 0; e < edges.size(); ++e) {
        vertex_edges[edges[e][0]].push_back(e);
        if (edges[e][1] != edges[e][0]) vertex_edges[edges[e][1]].push_back(e);
    }
    edge_faces.assign(edges.size(), {});
    for (std::uint32_t f = 0; f < faces.size(); ++f)
        for (DirEdge d : faces[f]) edge_faces[d.edge].push_back(f);
    face_cells.assign(faces.size(), {});
    for (std::uint32_t c = 0; c < cells.size(); ++c)
        for (auto f : cells[c]) face_cells[f].push_back(c);
}

std::size_t CellComplex::cell_edge_count(std::uint32_t c) const {
    return cell_edge_multiset(c).size();
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> CellComplex::cell_edge_multiset(
    std::uint32_t c) const {
    std::map<std::uint32_t, std::uint32_t> occ;
    for (auto f : cells[c])
        for (DirEdge d : faces[f]) occ[d.edge]++;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(occ.size());
    // Each edge of the cell surface is shared by two of its face slots.
    for (auto [e, m] : occ) {
        if (m % 2) throw MalformedComplex("cell surface not closed at an edge");
        out.push_back({e, m / 2});
    }
    return out;
}

std::vector<DirEdge> orient_cycle(const std::vector<std::uint32_t>& cycle,
                                  const std::vector<std::array<std::uint32_t, 2>>& edges) {
    const std::size_t k = cycle.size();
    std::vector<DirEdge> out(k);
    // Backtracking walk: two direction choices exist only at self-loops and
    // at the start, so this terminates quickly for well-formed cycles.
    std::vector<int> choice(k, -1);
    std::size_t i = 0;
    std::uint32_t head = 0;
    auto tail_of = [&](std::size_t j, bool rev) { return edges[cycle[j]][rev ? 1 : 0]; };
    auto head_of = [&](std::size_t j, bool rev) { return edges[cycle[j]][rev ? 0 : 1]; };
    while (i < k) {
        bool advanced = false;
        for (int dir = choice[i] + 1; dir < 2; ++dir) {
            bool rev = dir == 1;
            if (i > 0 && tail_of(i, rev) != head) continue;
            if (i == k - 1 && head_of(i, rev) != tail_of(0, out[0].rev)) continue;
            choice[i] = dir;
            out[i] = {cycle[i], rev};
            head = head_of(i, rev);
            ++i;
            advanced = true;
            break;
        }
        if (advanced) continue;
        choice[i] = -1;
        if (i == 0) throw MalformedComplex("face cycle cannot be oriented (not closed)");
        --i;
        if (i > 0) head = head_of(i - 1, out[i - 1].rev);
    }
    return out;
}

// ---------------------------------------------------------------------------

void UnitCellTemplate::check_labels() const {
    for (const auto& e : edges)
        for (const auto& r : e)
            if (r.idx >= num_vertices) throw MalformedTemplate(name + ": edge references missing vertex");
    for (const auto& f : faces)
        for (const auto& r : f)
            if (r.idx >= edges.size()) throw MalformedTemplate(name + ": face references missing edge");
    for (const auto& c : cells)
        for (const auto& r : c)
            if (r.idx >= faces.size()) throw MalformedTemplate(name + ": cell references missing face");
}

CellComplex instantiate(const UnitCellTemplate& tmpl, std::array<int, 3> dims) {
    for (int d : dims)
        if (d < 2) throw DimsTooSmall("torus dimensions must be at least 2 per axis");
    tmpl.check_labels();

    const long long ncell = 1ll * dims[0] * dims[1] * dims[2];
    auto cell_index = [&](int x, int y, int z) {
        auto mod = [](int a, int m) { int r = a % m; return r < 0 ? r + m : r; };
        return (1ll * mod(x, dims[0]) * dims[1] + mod(y, dims[1])) * dims[2] + mod(z, dims[2]);
    };
    auto resolve = [&](const TemplateRef& r, int x, int y, int z, std::size_t nlocal) {
        return static_cast<std::uint32_t>(
            cell_index(x + r.off[0], y + r.off[1], z + r.off[2]) * nlocal + r.idx);
    };

    CellComplex K;
    K.name = tmpl.name;
    K.dims = dims;
    K.unit_multiplicity = tmpl.unit_multiplicity;
    K.dim = tmpl.dim;
    K.num_vertices = static_cast<std::size_t>(ncell) * tmpl.num_vertices;

    if (!tmpl.vertex_pos.empty()) {
        K.embedding.resize(K.num_vertices);
        for (int x = 0; x < dims[0]; ++x)
            for (int y = 0; y < dims[1]; ++y)
                for (int z = 0; z < dims[2]; ++z) {
                    long long ci = cell_index(x, y, z);
                    for (std::size_t v = 0; v < tmpl.num_vertices; ++v)
                        K.embedding[ci * tmpl.num_vertices + v] = {
                            x + tmpl.vertex_pos[v][0], y + tmpl.vertex_pos[v][1],
                            z + tmpl.vertex_pos[v][2]};
                }
    }

    K.edges.resize(static_cast<std::size_t>(ncell) * tmpl.edges.size());
    K.faces.resize(static_cast<std::size_t>(ncell) * tmpl.faces.size());
    if (tmpl.dim == 3) K.cells.resize(static_cast<std::size_t>(ncell) * tmpl.cells.size());

    for (int x = 0; x < dims[0]; ++x)
        for (int y = 0; y < dims[1]; ++y)
            for (int z = 0; z < dims[2]; ++z) {
                long long ci = cell_index(x, y, z);
                for (std::size_t e = 0; e < tmpl.edges.size(); ++e) {
                    K.edges[ci * tmpl.edges.size() + e] = {
                        resolve(tmpl.edges[e][0], x, y, z, tmpl.num_vertices),
                        resolve(tmpl.edges[e][1], x, y, z, tmpl.num_vertices)};
                }
            }
    for (int x = 0; x < dims[0]; ++x)
        for (int y = 0; y < dims[1]; ++y)
            for (int z = 0; z < dims[2]; ++z) {
                long long ci = cell_index(x, y, z);
                for (std::size_t f = 0; f < tmpl.faces.size(); ++f) {
                    std::vector<std::uint32_t> cyc;
                    cyc.reserve(tmpl.faces[f].size());
                    for (const auto& r : tmpl.faces[f])
                        cyc.push_back(resolve(r, x, y, z, tmpl.edges.size()));
                    try {
                        K.faces[ci * tmpl.faces.size() + f] = orient_cycle(cyc, K.edges);
                    } catch (const MalformedComplex& ex) {
                        throw MalformedTemplate(tmpl.name + ": face " + std::to_string(f) +
                                                " has a non-closed edge cycle");
                    }
                }
                for (std::size_t c = 0; c < tmpl.cells.size(); ++c) {
                    auto& faceset = K.cells[ci * tmpl.cells.size() + c];
                    faceset.reserve(tmpl.cells[c].size());
                    for (const auto& r : tmpl.cells[c])
                        faceset.push_back(resolve(r, x, y, z, tmpl.faces.size()));
                    std::sort(faceset.begin(), faceset.end());
                }
            }

    K.finalize();
    return K;
}

// ---------------------------------------------------------------------------

ValidationReport validate_fusion_complex(const CellComplex& K) {
    ValidationReport rep;
    if (K.dim != 3) {
        rep.fail("fusion-complex", -1, "not a 3d complex");
        return rep;
    }
    for (std::uint32_t e = 0; e < K.num_edges(); ++e) {
        std::size_t deg = K.edge_faces[e].size();
        if (deg != 4)
            rep.fail("edge-four-faces", e,
                     "edge has " + std::to_string(deg) + " incident faces, expected 4");
    }
    return rep;
}

bool boundary_of_boundary_zero(const CellComplex& K) {
    for (std::uint32_t c = 0; c < K.num_cells(); ++c) {
        std::map<std::uint32_t, std::uint32_t> occ;
        for (auto f : K.cells[c])
            for (DirEdge d : K.faces[f]) occ[d.edge]++;
        for (auto [e, m] : occ)
            if (m % 2) return false;
    }
    return true;
}

long long euler_characteristic(const CellComplex& K) {
    return static_cast<long long>(K.num_vertices) - static_cast<long long>(K.num_edges()) +
           static_cast<long long>(K.num_faces()) - static_cast<long long>(K.num_cells());
}

namespace {

// BFS 2-coloring of a graph given by an adjacency callback.
template <typename Adj>
std::vector<std::uint8_t> two_color(std::size_t n, Adj&& neighbors, const char* what) {
    std::vector<std::uint8_t> color(n, 2);
    for (std::size_t s = 0; s < n; ++s) {
        if (color[s] != 2) continue;
        color[s] = 0;
        std::queue<std::uint32_t> q;
        q.push(static_cast<std::uint32_t>(s));
        while (!q.empty()) {
            std::uint32_t u = q.front();
            q.pop();
            for (std::uint32_t v : neighbors(u)) {
                if (v == u)
                    throw NotBicolorable(std::string(what) + ": self-adjacent element " +
                                         std::to_string(u));
                if (color[v] == 2) {
                    color[v] = color[u] ^ 1;
                    q.push(v);
                } else if (color[v] == color[u]) {
                    throw NotBicolorable(std::string(what) + ": odd cycle through element " +
                                         std::to_string(v));
                }
            }
        }
    }
    return color;
}

}  // namespace

CellColoring bicolor_cells(const CellComplex& K) {
    auto neighbors = [&](std::uint32_t c) {
        std::vector<std::uint32_t> out;
        for (auto f : K.cells[c])
            for (auto c2 : K.face_cells[f])
                if (c2 != c) out.push_back(c2);
        // A face with both sides on the same cell is a self-adjacency.
        for (auto f : K.cells[c]) {
            if (K.face_cells[f].size() == 2 && K.face_cells[f][0] == K.face_cells[f][1])
                out.push_back(c);
        }
        return out;
    };
    auto raw = two_color(K.num_cells(), neighbors, "cell bicoloring");
    CellColoring col;
    col.color.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i)
        col.color[i] = raw[i] == 0 ? CheckType::X : CheckType::Z;
    return col;
}

VertexColoring bicolor_vertices(const CellComplex& K) {
    auto neighbors = [&](std::uint32_t v) {
        std::vector<std::uint32_t> out;
        for (auto e : K.vertex_edges[v]) {
            if (K.edges[e][0] == K.edges[e][1])
                out.push_back(v);  // self-loop forces failure
            else
                out.push_back(K.edges[e][0] == v ? K.edges[e][1] : K.edges[e][0]);
        }
        return out;
    };
    VertexColoring col;
    col.color = two_color(K.num_vertices, neighbors, "vertex bicoloring");
    return col;
}

std::vector<std::uint8_t> bicolor_faces_2d(const CellComplex& M) {
    auto neighbors = [&](std::uint32_t f) {
        std::vector<std::uint32_t> out;
        for (DirEdge d : M.faces[f]) {
            for (auto f2 : M.edge_faces[d.edge])
                if (f2 != f) out.push_back(f2);
            // face glued to itself along an edge
            std::size_t self = 0;
            for (auto f2 : M.edge_faces[d.edge])
                if (f2 == f) ++self;
            if (self == 2) out.push_back(f);
        }
        return out;
    };
    return two_color(M.num_faces(), neighbors, "face bicoloring");
}

bool is_proper_cell_coloring(const CellComplex& K, const CellColoring& col) {
    if (col.color.size() != K.num_cells()) return false;
    for (std::uint32_t f = 0; f < K.num_faces(); ++f) {
        if (K.face_cells[f].size() != 2) return false;
        if (col.color[K.face_cells[f][0]] == col.color[K.face_cells[f][1]]) return false;
    }
    return true;
}

std::vector<std::uint32_t> cut_edges(const CellComplex& K,
                                     const std::vector<std::uint8_t>& in_region) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t e = 0; e < K.num_edges(); ++e) {
        if (in_region[K.edges[e][0]] != in_region[K.edges[e][1]]) out.push_back(e);
    }
    return out;
}

}  // namespace ftc
