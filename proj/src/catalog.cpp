#include "ftc/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ftc::gen {

namespace {

using IVec = std::array<int, 3>;

IVec operator+(IVec a, IVec b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
IVec operator-(IVec a, IVec b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
IVec neg(IVec a) { return {-a[0], -a[1], -a[2]}; }

// Accumulates a periodic template from elements given in scaled integer
// coordinates; the unit cell is [0,scale)^3 and positions anywhere in Z^3
// wrap into (base element, cell offset) references.
class TemplateBuilder {
public:
    TemplateBuilder(std::string name, IVec scale) : scale_(scale) { tmpl_.name = std::move(name); }

    std::uint32_t vertex(IVec pos) {
        auto [base, off] = split(pos);
        auto it = vmap_.find(base);
        if (it != vmap_.end()) return it->second;
        std::uint32_t id = static_cast<std::uint32_t>(tmpl_.num_vertices++);
        vmap_.emplace(base, id);
        tmpl_.vertex_pos.push_back({double(base[0]) / scale_[0], double(base[1]) / scale_[1],
                                    double(base[2]) / scale_[2]});
        return id;
    }

    std::uint32_t edge(IVec a, IVec b) {
        vertex(a);
        vertex(b);
        auto [key, t] = edge_key(a, b);
        auto it = emap_.find(key);
        if (it != emap_.end()) return it->second;
        std::uint32_t id = static_cast<std::uint32_t>(tmpl_.edges.size());
        emap_.emplace(key, id);
        // The key is the translated representative; store refs at offset 0.
        tmpl_.edges.push_back({ref_of_vertex(key.first), ref_of_vertex(key.second)});
        return id;
    }

    std::uint32_t face(const std::vector<IVec>& cycle) {
        auto [key, t] = face_key(cycle);
        auto it = fmap_.find(key);
        if (it != fmap_.end()) return it->second;
        std::uint32_t id = static_cast<std::uint32_t>(tmpl_.faces.size());
        fmap_.emplace(key, id);
        std::vector<TemplateRef> refs;
        for (std::size_t i = 0; i < key.size(); ++i) {
            IVec a = key[i], b = key[(i + 1) % key.size()];
            std::uint32_t e = edge(a, b);
            auto [ekey, et] = edge_key(a, b);
            refs.push_back({e, et});
        }
        tmpl_.faces.push_back(std::move(refs));
        return id;
    }

    void cell(const std::vector<std::vector<IVec>>& face_cycles) {
        std::vector<TemplateRef> refs;
        for (const auto& cyc : face_cycles) {
            std::uint32_t f = face(cyc);
            auto [key, t] = face_key(cyc);
            refs.push_back({f, t});
        }
        tmpl_.cells.push_back(std::move(refs));
    }

    UnitCellTemplate build(int unit_multiplicity, int dim = 3) {
        tmpl_.unit_multiplicity = unit_multiplicity;
        tmpl_.dim = dim;
        return tmpl_;
    }

private:
    static int floordiv(int a, int m) { return a >= 0 ? a / m : -((-a + m - 1) / m); }

    std::pair<IVec, IVec> split(IVec pos) const {
        IVec off{floordiv(pos[0], scale_[0]), floordiv(pos[1], scale_[1]),
                 floordiv(pos[2], scale_[2])};
        IVec base = pos - IVec{off[0] * scale_[0], off[1] * scale_[1], off[2] * scale_[2]};
        return {base, off};
    }

    TemplateRef ref_of_vertex(IVec pos) {
        auto [base, off] = split(pos);
        return {vmap_.at(base), off};
    }

    // Canonical representative of an edge: translate so the smaller
    // (base index, offset) endpoint sits in cell 0, endpoints ordered.
    std::pair<std::pair<IVec, IVec>, IVec> edge_key(IVec a, IVec b) {
        auto norm = [&](IVec p, IVec q) -> std::pair<std::pair<IVec, IVec>, IVec> {
            auto [base, off] = split(p);
            IVec shift{off[0] * scale_[0], off[1] * scale_[1], off[2] * scale_[2]};
            return {{p - shift, q - shift}, off};
        };
        auto c1 = norm(a, b);
        auto c2 = norm(b, a);
        return c1.first <= c2.first ? c1 : c2;
    }

    // Canonical representative of a face cycle: minimal over rotations,
    // reflections and translations.
    std::pair<std::vector<IVec>, IVec> face_key(std::vector<IVec> cyc) {
        std::vector<IVec> best;
        IVec best_t{0, 0, 0};
        const std::size_t k = cyc.size();
        for (int refl = 0; refl < 2; ++refl) {
            for (std::size_t r = 0; r < k; ++r) {
                std::vector<IVec> cand(k);
                for (std::size_t i = 0; i < k; ++i) cand[i] = cyc[(r + i) % k];
                auto [base, off] = split(cand[0]);
                IVec shift{off[0] * scale_[0], off[1] * scale_[1], off[2] * scale_[2]};
                for (auto& p : cand) p = p - shift;
                if (best.empty() || cand < best) {
                    best = cand;
                    best_t = off;
                }
            }
            std::reverse(cyc.begin(), cyc.end());
        }
        return {best, best_t};
    }

    IVec scale_;
    UnitCellTemplate tmpl_;
    std::map<IVec, std::uint32_t> vmap_;
    std::map<std::pair<IVec, IVec>, std::uint32_t> emap_;
    std::map<std::vector<IVec>, std::uint32_t> fmap_;
};

UnitCellTemplate make_cubic() {
    TemplateBuilder b("cubic", {1, 1, 1});
    b.vertex({0, 0, 0});
    b.edge({0, 0, 0}, {1, 0, 0});
    b.edge({0, 0, 0}, {0, 1, 0});
    b.edge({0, 0, 0}, {0, 0, 1});
    auto sq = [&](IVec o, IVec u, IVec v) {
        return std::vector<IVec>{o, o + u, o + u + v, o + v};
    };
    IVec ex{1, 0, 0}, ey{0, 1, 0}, ez{0, 0, 1}, O{0, 0, 0};
    b.face(sq(O, ex, ey));
    b.face(sq(O, ey, ez));
    b.face(sq(O, ez, ex));
    b.cell({sq(O, ex, ey), sq(ez, ex, ey), sq(O, ey, ez), sq(ex, ey, ez), sq(O, ez, ex),
            sq(ey, ez, ex)});
    return b.build(1);
}

// Corner-hexagon complex over the cubic lattice: resource states are
// 4-GHZ states on cubic edge midpoints and face centers.
UnitCellTemplate make_four_star() {
    TemplateBuilder b("4-star", {2, 2, 2});
    // edge midpoints first, then face centers
    b.vertex({1, 0, 0});
    b.vertex({0, 1, 0});
    b.vertex({0, 0, 1});
    b.vertex({0, 1, 1});
    b.vertex({1, 0, 1});
    b.vertex({1, 1, 0});

    auto hexagon = [&](IVec corner, IVec center) {
        IVec d{center[0] > corner[0] ? 1 : -1, center[1] > corner[1] ? 1 : -1,
               center[2] > corner[2] ? 1 : -1};
        IVec m1 = corner + IVec{d[0], 0, 0};
        IVec m2 = corner + IVec{0, d[1], 0};
        IVec m3 = corner + IVec{0, 0, d[2]};
        IVec f12 = corner + IVec{d[0], d[1], 0};
        IVec f23 = corner + IVec{0, d[1], d[2]};
        IVec f31 = corner + IVec{d[0], 0, d[2]};
        return std::vector<IVec>{m1, f12, m2, f23, m3, f31};
    };

    // vertex-cells first so checks at cubic vertices take color X
    std::vector<std::vector<IVec>> vcell;
    for (int sx : {-1, 1})
        for (int sy : {-1, 1})
            for (int sz : {-1, 1}) vcell.push_back(hexagon({0, 0, 0}, {sx, sy, sz}));
    b.cell(vcell);
    std::vector<std::vector<IVec>> ccell;
    for (int sx : {0, 2})
        for (int sy : {0, 2})
            for (int sz : {0, 2}) ccell.push_back(hexagon({sx, sy, sz}, {1, 1, 1}));
    b.cell(ccell);
    return b.build(2);
}

const std::vector<IVec> kFcc{{0, 0, 0}, {0, 2, 2}, {2, 0, 2}, {2, 2, 0}};

bool is_fcc(IVec p) {
    if ((p[0] | p[1] | p[2]) & 1) return false;
    return ((p[0] + p[1] + p[2]) % 4 + 4) % 4 == 0;
}

// Tetrahedral-octahedral honeycomb on the FCC lattice.
UnitCellTemplate make_alternated_cubic() {
    TemplateBuilder b("alternated-cubic", {4, 4, 4});
    for (IVec a : kFcc) b.vertex(a);

    auto tet_vertices = [&](IVec t) {
        std::vector<IVec> vs;
        for (int sx : {-1, 1})
            for (int sy : {-1, 1})
                for (int sz : {-1, 1}) {
                    IVec p = t + IVec{sx, sy, sz};
                    if (is_fcc({((p[0] % 4) + 4) % 4, ((p[1] % 4) + 4) % 4, ((p[2] % 4) + 4) % 4}))
                        vs.push_back(p);
                }
        return vs;  // exactly 4
    };
    auto tet_faces = [&](const std::vector<IVec>& vs) {
        std::vector<std::vector<IVec>> fs;
        for (int skip = 0; skip < 4; ++skip) {
            std::vector<IVec> tri;
            for (int i = 0; i < 4; ++i)
                if (i != skip) tri.push_back(vs[i]);
            fs.push_back(tri);
        }
        return fs;
    };

    // tetrahedra first: their color class drives the X syndrome graph
    for (int x : {1, 3})
        for (int y : {1, 3})
            for (int z : {1, 3}) b.cell(tet_faces(tet_vertices({x, y, z})));

    for (IVec c : std::vector<IVec>{{2, 2, 2}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}}) {
        std::vector<std::vector<IVec>> fs;
        for (int sx : {-1, 1})
            for (int sy : {-1, 1})
                for (int sz : {-1, 1})
                    fs.push_back({c + IVec{2 * sx, 0, 0}, c + IVec{0, 2 * sy, 0},
                                  c + IVec{0, 0, 2 * sz}});
        b.cell(fs);
    }
    return b.build(4);
}

// Quarter-cubic honeycomb: corner-sharing tetrahedra on the pyrochlore
// lattice plus truncated tetrahedra.
UnitCellTemplate make_pyrochlore() {
    TemplateBuilder b("pyrochlore", {4, 4, 4});
    const std::vector<IVec> basis{{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    for (IVec a : kFcc)
        for (IVec s : basis) b.vertex(a + s);

    auto tet = [&](IVec a, int sign) {
        std::vector<IVec> vs{a};
        for (int i = 1; i < 4; ++i)
            vs.push_back(sign > 0 ? a + basis[i] : a - basis[i]);
        std::vector<std::vector<IVec>> fs;
        for (int skip = 0; skip < 4; ++skip) {
            std::vector<IVec> tri;
            for (int i = 0; i < 4; ++i)
                if (i != skip) tri.push_back(vs[i]);
            fs.push_back(tri);
        }
        return fs;
    };

    auto trunc = [&](IVec a, int sg) {
        auto at = [&](IVec off) {
            return sg > 0 ? a + off : a - off;
        };
        std::vector<std::vector<IVec>> fs;
        // corner-cut triangles
        fs.push_back({at({1, 1, 0}), at({1, 0, 1}), at({0, 1, 1})});
        fs.push_back({at({2, 2, 0}), at({3, 2, 1}), at({2, 3, 1})});
        fs.push_back({at({2, 0, 2}), at({3, 1, 2}), at({2, 1, 3})});
        fs.push_back({at({0, 2, 2}), at({1, 3, 2}), at({1, 2, 3})});
        // hexagons on the four bounding planes
        fs.push_back({at({3, 2, 1}), at({3, 1, 2}), at({2, 1, 3}), at({1, 2, 3}), at({1, 3, 2}),
                      at({2, 3, 1})});
        fs.push_back({at({1, 0, 1}), at({2, 0, 2}), at({2, 1, 3}), at({1, 2, 3}), at({0, 2, 2}),
                      at({0, 1, 1})});
        fs.push_back({at({1, 1, 0}), at({2, 2, 0}), at({2, 3, 1}), at({1, 3, 2}), at({0, 2, 2}),
                      at({0, 1, 1})});
        fs.push_back({at({1, 1, 0}), at({2, 2, 0}), at({3, 2, 1}), at({3, 1, 2}), at({2, 0, 2}),
                      at({1, 0, 1})});
        return fs;
    };

    for (IVec a : kFcc) b.cell(tet(a, +1));
    for (IVec a : kFcc) b.cell(tet(a, -1));
    for (IVec a : kFcc) b.cell(trunc(a, +1));
    for (IVec a : kFcc) b.cell(trunc(a, -1));
    return b.build(4);
}

// Hexagonal prisms in brick-wall representation; the vertical edges have
// three incident faces, so this is not a fusion complex.
UnitCellTemplate make_hexagonal_prism() {
    TemplateBuilder b("hexagonal-prism", {2, 2, 1});
    b.vertex({0, 0, 0});
    b.vertex({1, 0, 0});
    b.vertex({0, 1, 0});
    b.vertex({1, 1, 0});

    auto brick = [&](IVec o) {
        return std::vector<IVec>{o,
                                 o + IVec{1, 0, 0},
                                 o + IVec{2, 0, 0},
                                 o + IVec{2, 1, 0},
                                 o + IVec{1, 1, 0},
                                 o + IVec{0, 1, 0}};
    };
    auto wall = [&](IVec a, IVec bb) {
        return std::vector<IVec>{a, bb, bb + IVec{0, 0, 1}, a + IVec{0, 0, 1}};
    };
    auto up = [](std::vector<IVec> cyc) {
        for (auto& p : cyc) p = p + IVec{0, 0, 1};
        return cyc;
    };

    for (IVec o : std::vector<IVec>{{0, 0, 0}, {1, 1, 0}}) {
        std::vector<IVec> corners = brick(o);
        std::vector<std::vector<IVec>> fs{brick(o), up(brick(o))};
        for (std::size_t i = 0; i < corners.size(); ++i)
            fs.push_back(wall(corners[i], corners[(i + 1) % corners.size()]));
        b.cell(fs);
    }
    return b.build(1);
}

// Square bipyramids over the faces of the cubic lattice (bcc vertex set);
// all faces are triangles and the vertices are 3-colorable.
UnitCellTemplate make_bcc_bipyramid() {
    TemplateBuilder b("bcc-bipyramid", {2, 2, 2});
    b.vertex({0, 0, 0});
    b.vertex({1, 1, 1});

    IVec ex{2, 0, 0}, ey{0, 2, 0}, ez{0, 0, 2};
    auto bipyramid = [&](IVec o, IVec u, IVec v, IVec apex_dir) {
        // square o, o+u, o+u+v, o+v with apexes at the two cube centers
        std::vector<IVec> corners{o, o + u, o + u + v, o + v};
        IVec apex_a{(2 * o[0] + u[0] + v[0] + apex_dir[0]) / 2,
                    (2 * o[1] + u[1] + v[1] + apex_dir[1]) / 2,
                    (2 * o[2] + u[2] + v[2] + apex_dir[2]) / 2};
        IVec apex_b{apex_a[0] - apex_dir[0], apex_a[1] - apex_dir[1], apex_a[2] - apex_dir[2]};
        std::vector<std::vector<IVec>> fs;
        for (int i = 0; i < 4; ++i) {
            fs.push_back({corners[i], corners[(i + 1) % 4], apex_a});
            fs.push_back({corners[i], corners[(i + 1) % 4], apex_b});
        }
        return fs;
    };

    IVec O{0, 0, 0};
    b.cell(bipyramid(O, ex, ey, ez));
    b.cell(bipyramid(O, ey, ez, ex));
    b.cell(bipyramid(O, ez, ex, ey));
    return b.build(1);
}

}  // namespace

UnitCellTemplate catalog(const std::string& name) {
    if (name == "cubic") return make_cubic();
    if (name == "alternated-cubic") return make_alternated_cubic();
    if (name == "4-star") return make_four_star();
    if (name == "pyrochlore") return make_pyrochlore();
    if (name == "hexagonal-prism") return make_hexagonal_prism();
    if (name == "bcc-bipyramid") return make_bcc_bipyramid();
    throw UnknownName("unknown catalog complex: " + name);
}

std::vector<std::string> catalog_names() {
    return {"cubic", "alternated-cubic", "4-star", "pyrochlore", "hexagonal-prism",
            "bcc-bipyramid"};
}

std::vector<std::string> fusion_catalog_names() {
    return {"cubic", "alternated-cubic", "4-star", "pyrochlore"};
}

namespace {

CellComplex closed_surface(std::string name, std::size_t nv,
                           const std::vector<std::array<std::uint32_t, 2>>& edges,
                           const std::vector<std::vector<std::uint32_t>>& face_cycles) {
    CellComplex M;
    M.dim = 2;
    M.name = std::move(name);
    M.num_vertices = nv;
    M.edges = edges;
    for (const auto& cyc : face_cycles) M.faces.push_back(orient_cycle(cyc, M.edges));
    M.finalize();
    return M;
}

}  // namespace

CellComplex tetrahedron_surface() {
    // vertices 0..3; edges: 01 02 03 12 13 23
    return closed_surface(
        "tetrahedron", 4,
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
        {{0, 3, 1}, {0, 4, 2}, {1, 5, 2}, {3, 5, 4}});
}

CellComplex octahedron_surface() {
    // vertices: poles 0,5; equator 1,2,3,4
    std::vector<std::array<std::uint32_t, 2>> e{{0, 1}, {0, 2}, {0, 3}, {0, 4},   // 0-3 top
                                                {1, 2}, {2, 3}, {3, 4}, {4, 1},   // 4-7 equator
                                                {5, 1}, {5, 2}, {5, 3}, {5, 4}};  // 8-11 bottom
    return closed_surface("octahedron", 6, e,
                          {{0, 4, 1},
                           {1, 5, 2},
                           {2, 6, 3},
                           {3, 7, 0},
                           {8, 4, 9},
                           {9, 5, 10},
                           {10, 6, 11},
                           {11, 7, 8}});
}

CellComplex cube_surface() {
    // bottom 0..3, top 4..7
    std::vector<std::array<std::uint32_t, 2>> e{{0, 1}, {1, 2}, {2, 3}, {3, 0},   // bottom
                                                {4, 5}, {5, 6}, {6, 7}, {7, 4},   // top
                                                {0, 4}, {1, 5}, {2, 6}, {3, 7}};  // verticals
    return closed_surface("cube", 8, e,
                          {{0, 1, 2, 3},
                           {4, 5, 6, 7},
                           {0, 9, 4, 8},
                           {1, 10, 5, 9},
                           {2, 11, 6, 10},
                           {3, 8, 7, 11}});
}

CellComplex square_torus_2d(int lx, int ly) {
    if (lx < 2 || ly < 2) throw DimsTooSmall("square torus needs lx, ly >= 2");
    CellComplex M;
    M.dim = 2;
    M.name = "square-torus";
    M.num_vertices = static_cast<std::size_t>(lx) * ly;
    auto vid = [&](int x, int y) {
        return static_cast<std::uint32_t>(((x % lx + lx) % lx) * ly + ((y % ly + ly) % ly));
    };
    auto ex = [&](int x, int y) { return 2 * vid(x, y); };
    auto ey = [&](int x, int y) { return 2 * vid(x, y) + 1; };
    M.edges.resize(2 * M.num_vertices);
    for (int x = 0; x < lx; ++x)
        for (int y = 0; y < ly; ++y) {
            M.edges[ex(x, y)] = {vid(x, y), vid(x + 1, y)};
            M.edges[ey(x, y)] = {vid(x, y), vid(x, y + 1)};
        }
    for (int x = 0; x < lx; ++x)
        for (int y = 0; y < ly; ++y)
            M.faces.push_back(
                orient_cycle({ex(x, y), ey(x + 1, y), ex(x, y + 1), ey(x, y)}, M.edges));
    M.finalize();
    return M;
}

CellComplex one_vertex_torus_2d() {
    CellComplex M;
    M.dim = 2;
    M.name = "one-vertex-torus";
    M.num_vertices = 1;
    M.edges = {{0, 0}, {0, 0}};
    // a b a^-1 b^-1
    M.faces = {{{0, false}, {1, false}, {0, true}, {1, true}}};
    M.finalize();
    return M;
}

}  // namespace ftc::gen
