#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ftc/bitvec.hpp"
#include "ftc/catalog.hpp"
#include "ftc/chambers.hpp"
#include "ftc/complex.hpp"
#include "ftc/pauli.hpp"

using namespace ftc;

TEST_CASE("bitops backends agree") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng() % 40;
        std::vector<std::uint64_t> a(n), b(n), d1, d2;
        for (auto& w : a) w = rng();
        for (auto& w : b) w = rng();
        d1 = a;
        d2 = a;
        auto native = bitops::force_backend(bitops::active_backend());
        bitops::xor_into(d1.data(), b.data(), n);
        auto p1 = bitops::popcount(d1.data(), n);
        auto ap1 = bitops::and_popcount(a.data(), b.data(), n);
        auto op1 = bitops::or_popcount(a.data(), b.data(), n);
        bitops::force_backend(bitops::Backend::scalar);
        bitops::xor_into(d2.data(), b.data(), n);
        auto p2 = bitops::popcount(d2.data(), n);
        auto ap2 = bitops::and_popcount(a.data(), b.data(), n);
        auto op2 = bitops::or_popcount(a.data(), b.data(), n);
        bitops::force_backend(native);
        CHECK(d1 == d2);
        CHECK(p1 == p2);
        CHECK(ap1 == ap2);
        CHECK(op1 == op2);
    }
}

TEST_CASE("pauli commutation basics") {
    using namespace ftc::pauli;
    auto XI = PauliWord::from_string("XI");
    auto ZI = PauliWord::from_string("ZI");
    auto XX = PauliWord::from_string("XX");
    auto ZZ = PauliWord::from_string("ZZ");
    CHECK_FALSE(commutes(XI, ZI));
    CHECK(commutes(XX, ZZ));
    CHECK_THROWS_AS(commutes(XI, PauliWord::from_string("XII")), LengthMismatch);
}

TEST_CASE("pauli commutation vs dense oracle") {
    using namespace ftc::pauli;
    // brute-force sign tracking on the common support
    auto oracle = [](const PauliWord& a, const PauliWord& b) {
        int anti = 0;
        for (std::size_t q = 0; q < a.num_qubits(); ++q) {
            int ax = a.x().get(q), az = a.z().get(q);
            int bx = b.x().get(q), bz = b.z().get(q);
            // single-qubit Paulis anticommute iff both non-identity and differ
            if ((ax | az) && (bx | bz) && (ax != bx || az != bz)) anti ^= 1;
        }
        return anti == 0;
    };
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        PauliWord a(20), b(20);
        for (int q = 0; q < 20; ++q) {
            if (rng() & 1) a.set_x(q);
            if (rng() & 1) a.set_z(q);
            if (rng() & 1) b.set_x(q);
            if (rng() & 1) b.set_z(q);
        }
        CHECK(commutes(a, b) == oracle(a, b));
    }
}

TEST_CASE("span_reduce rank matches brute-force group size") {
    using namespace ftc::pauli;
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        GeneratorSet g(8);
        int m = 3 + int(rng() % 9);
        for (int i = 0; i < m; ++i) {
            PauliWord w(8);
            for (int q = 0; q < 8; ++q) {
                if (rng() & 1) w.set_x(q);
                if (rng() & 1) w.set_z(q);
            }
            g.add(w);
        }
        auto red = span_reduce(g);
        auto all = enumerate_span(g);
        CHECK(all.size() == (std::size_t{1} << red.size()));
        // every original generator is in the span of the reduction
        for (std::size_t i = 0; i < g.size(); ++i) CHECK(in_span(red, g[i]));
    }
}

TEST_CASE("group intersection matches set-intersection oracle") {
    using namespace ftc::pauli;
    std::mt19937_64 rng(17);
    for (int t = 0; t < 15; ++t) {
        GeneratorSet a(6), b(6);
        for (int i = 0; i < 5; ++i) {
            PauliWord w(6), v(6);
            for (int q = 0; q < 6; ++q) {
                if (rng() & 1) w.set_x(q);
                if (rng() & 1) w.set_z(q);
                if (rng() & 1) v.set_x(q);
                if (rng() & 1) v.set_z(q);
            }
            a.add(w);
            b.add(v);
        }
        auto inter = group_intersection(a, b);
        // oracle: enumerate both spans and intersect as sets
        auto ea = enumerate_span(a);
        auto eb = enumerate_span(b);
        std::sort(ea.begin(), ea.end());
        std::sort(eb.begin(), eb.end());
        std::vector<PauliWord> want;
        std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                              std::back_inserter(want));
        auto got = enumerate_span(inter);
        std::sort(got.begin(), got.end());
        CHECK(got == want);
    }
}

TEST_CASE("intersection simple cases") {
    using namespace ftc::pauli;
    GeneratorSet a(2), b(2);
    a.add(PauliWord::from_string("XX"));
    b.add(PauliWord::from_string("XX"));
    b.add(PauliWord::from_string("ZZ"));
    auto i = group_intersection(a, b);
    CHECK(i.size() == 1);
    CHECK(in_span(i, PauliWord::from_string("XX")));

    GeneratorSet c(2), d(2);
    c.add(PauliWord::from_string("XI"));
    d.add(PauliWord::from_string("IZ"));
    CHECK(group_intersection(c, d).size() == 0);
}

TEST_CASE("centralizer_intersection basics") {
    using namespace ftc::pauli;
    GeneratorSet g(1);
    g.add(PauliWord::from_string("X"));
    g.add(PauliWord::from_string("Z"));
    CHECK(centralizer_intersection(g).size() == 0);

    GeneratorSet h(2);
    h.add(PauliWord::from_string("XX"));
    h.add(PauliWord::from_string("ZZ"));
    auto s = centralizer_intersection(h);
    CHECK(s.size() == 2);
    CHECK(same_span(s, h));
}

TEST_CASE("centralizer has complementary rank and commutes") {
    using namespace ftc::pauli;
    std::mt19937_64 rng(23);
    GeneratorSet g(7);
    for (int i = 0; i < 6; ++i) {
        PauliWord w(7);
        for (int q = 0; q < 7; ++q) {
            if (rng() & 1) w.set_x(q);
            if (rng() & 1) w.set_z(q);
        }
        g.add(w);
    }
    auto z = centralizer(g);
    CHECK(rank(z) == 14 - rank(g));
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) CHECK(commutes(z[i], g[j]));
}

// ---------------------------------------------------------------------------

TEST_CASE("cubic instantiation counts") {
    auto K = instantiate(gen::catalog("cubic"), {2, 2, 2});
    CHECK(K.num_vertices == 8);
    CHECK(K.num_edges() == 24);
    CHECK(K.num_faces() == 24);
    CHECK(K.num_cells() == 8);
    CHECK(euler_characteristic(K) == 0);
    CHECK(boundary_of_boundary_zero(K));
    CHECK(validate_fusion_complex(K).valid);
    CHECK_THROWS_AS(instantiate(gen::catalog("cubic"), {1, 2, 2}), DimsTooSmall);
}

TEST_CASE("catalog complexes are valid fusion complexes with chi = 0") {
    for (const auto& name : gen::fusion_catalog_names()) {
        CAPTURE(name);
        auto K = instantiate(gen::catalog(name), {2, 2, 2});
        CHECK(euler_characteristic(K) == 0);
        CHECK(boundary_of_boundary_zero(K));
        CHECK(validate_fusion_complex(K).valid);
    }
}

TEST_CASE("alternated-cubic per-unit-cell cell profile is 2x6+12") {
    auto K = instantiate(gen::catalog("alternated-cubic"), {2, 2, 2});
    // per template cell: 8 tetrahedra (6 edges) + 4 octahedra (12 edges)
    std::map<std::size_t, int> sizes;
    for (std::uint32_t c = 0; c < K.num_cells(); ++c) sizes[K.cell_edge_count(c)]++;
    CHECK(sizes[6] == 8 * 8);
    CHECK(sizes[12] == 4 * 8);
}

TEST_CASE("pyrochlore structure") {
    auto K = instantiate(gen::catalog("pyrochlore"), {2, 2, 2});
    CHECK(K.num_vertices == 16 * 8);
    CHECK(K.num_edges() == 48 * 8);
    CHECK(K.num_faces() == 48 * 8);
    CHECK(K.num_cells() == 16 * 8);
    std::map<std::size_t, int> sizes;
    for (std::uint32_t c = 0; c < K.num_cells(); ++c) sizes[K.cell_edge_count(c)]++;
    CHECK(sizes[6] == 8 * 8);
    CHECK(sizes[18] == 8 * 8);
    // every vertex has degree 6
    for (auto& ve : K.vertex_edges) CHECK(ve.size() == 6);
}

TEST_CASE("hexagonal prism honeycomb fails the four-face rule on vertical edges") {
    auto K = instantiate(gen::catalog("hexagonal-prism"), {2, 2, 2});
    auto rep = validate_fusion_complex(K);
    CHECK_FALSE(rep.valid);
    for (const auto& v : rep.violations) {
        auto e = K.edges[static_cast<std::uint32_t>(v.element)];
        (void)e;
        CHECK(v.rule == "edge-four-faces");
    }
    // exactly the vertical edges violate (3 faces each): 4 per template cell
    CHECK(rep.violations.size() == 4u * 8);
}

TEST_CASE("bicoloring") {
    auto K = instantiate(gen::catalog("cubic"), {2, 2, 2});
    auto col = bicolor_cells(K);
    CHECK(is_proper_cell_coloring(K, col));
    CHECK(col.color[0] == CheckType::X);
    CHECK_THROWS_AS(bicolor_cells(instantiate(gen::catalog("cubic"), {3, 4, 4})), NotBicolorable);

    auto vcol = bicolor_vertices(K);
    for (std::uint32_t e = 0; e < K.num_edges(); ++e)
        CHECK(vcol.color[K.edges[e][0]] != vcol.color[K.edges[e][1]]);

    CHECK_THROWS_AS(bicolor_vertices(instantiate(gen::catalog("pyrochlore"), {2, 2, 2})),
                    NotBicolorable);
    CHECK_NOTHROW(bicolor_vertices(instantiate(gen::catalog("4-star"), {2, 2, 2})));

    // alternated-cubic: tetrahedra and octahedra fall in opposite classes
    auto A = instantiate(gen::catalog("alternated-cubic"), {2, 2, 2});
    auto acol = bicolor_cells(A);
    CHECK(is_proper_cell_coloring(A, acol));
    for (std::uint32_t c = 0; c < A.num_cells(); ++c) {
        bool tet = A.cell_edge_count(c) == 6;
        CHECK((acol.color[c] == CheckType::X) == tet);
    }
}

TEST_CASE("pyrochlore bicolors at all dims >= 2") {
    for (auto dims : std::vector<std::array<int, 3>>{{2, 2, 2}, {3, 2, 2}, {2, 3, 3}}) {
        auto K = instantiate(gen::catalog("pyrochlore"), dims);
        CHECK(is_proper_cell_coloring(K, bicolor_cells(K)));
    }
}

// ---------------------------------------------------------------------------

TEST_CASE("dualize: cubic is self-dual, involution holds") {
    auto K = instantiate(gen::catalog("cubic"), {2, 2, 2});
    auto D = dualize(K);
    CHECK(D.num_vertices == K.num_cells());
    CHECK(D.num_cells() == K.num_vertices);
    CHECK(D.num_edges() == K.num_faces());
    CHECK(D.num_faces() == K.num_edges());
    CHECK(isomorphic(K, D));
    CHECK(isomorphic(K, dualize(D)));
}

TEST_CASE("dualize: alternated-cubic dual has all-square faces") {
    auto K = instantiate(gen::catalog("alternated-cubic"), {2, 2, 2});
    auto D = dualize(K);
    for (auto& f : D.faces) CHECK(f.size() == 4);
    CHECK(isomorphic(K, dualize(D)));
}

TEST_CASE("fusion-complex rule agrees with dual quadrilateral rule") {
    for (const auto& name : gen::catalog_names()) {
        if (name == "bcc-bipyramid") continue;  // not closed under chamber pairing? it is; keep
        CAPTURE(name);
        auto K = instantiate(gen::catalog(name), {2, 2, 2});
        bool valid = validate_fusion_complex(K).valid;
        auto D = dualize(K);
        bool all_quads = true;
        for (auto& f : D.faces) all_quads &= f.size() == 4;
        CHECK(valid == all_quads);
    }
}

TEST_CASE("canonical certificates distinguish cubic from alternated-cubic") {
    auto A = instantiate(gen::catalog("cubic"), {2, 2, 2});
    auto B = instantiate(gen::catalog("alternated-cubic"), {2, 2, 2});
    CHECK_FALSE(isomorphic(A, B));
    // same complex at shifted construction is isomorphic
    auto A2 = instantiate(gen::catalog("cubic"), {2, 2, 2});
    CHECK(isomorphic(A, A2));
}

// ---------------------------------------------------------------------------

TEST_CASE("medial of tetrahedron is the octahedron") {
    auto oct = medial_plaquette(gen::tetrahedron_surface());
    CHECK(oct.num_vertices == 6);
    CHECK(oct.num_edges() == 12);
    CHECK(oct.num_faces() == 8);
    for (std::uint32_t v = 0; v < oct.num_vertices; ++v) CHECK(oct.vertex_edges[v].size() == 4);
    CHECK(isomorphic(oct, gen::octahedron_surface()));
    CHECK_NOTHROW(bicolor_faces_2d(oct));
}

TEST_CASE("medial of the square torus is a square torus") {
    auto M = gen::square_torus_2d(2, 2);
    auto P = medial_plaquette(M);
    CHECK(P.num_vertices == 8);
    for (std::uint32_t v = 0; v < P.num_vertices; ++v) CHECK(P.vertex_edges[v].size() == 4);
    CHECK(euler_characteristic(P) == 0);
    CHECK_NOTHROW(bicolor_faces_2d(P));
}

TEST_CASE("medial of the one-vertex torus has two vertices") {
    auto P = medial_plaquette(gen::one_vertex_torus_2d());
    CHECK(P.num_vertices == 2);
    CHECK(P.num_edges() == 4);
    CHECK(P.num_faces() == 2);
    CHECK(euler_characteristic(P) == 0);
}

TEST_CASE("medial rejects open surfaces") {
    CellComplex open2d;
    open2d.dim = 2;
    open2d.num_vertices = 3;
    open2d.edges = {{0, 1}, {1, 2}, {2, 0}};
    open2d.faces = {orient_cycle({0, 1, 2}, open2d.edges)};
    open2d.finalize();
    CHECK_THROWS_AS(medial_plaquette(open2d), NotAClosedSurface);
}

TEST_CASE("boundary membrane of a single cubic vertex is the cube surface") {
    auto K = instantiate(gen::catalog("cubic"), {4, 4, 4});
    std::vector<std::uint8_t> region(K.num_vertices, 0);
    region[0] = 1;
    auto mem = boundary_membrane(K, region);
    CHECK(mem.num_faces() == 6);
    CHECK(mem.num_edges() == 12);
    CHECK(mem.num_vertices == 8);
    for (auto& f : mem.faces) CHECK(f.size() == 4);
    // dual of the membrane is the plaquette octahedron
    CHECK(isomorphic(dualize(mem), gen::octahedron_surface()));
}

TEST_CASE("boundary membrane of a half-space is two disjoint 4x4 torus sheets") {
    auto K = instantiate(gen::catalog("cubic"), {4, 4, 4});
    std::vector<std::uint8_t> region(K.num_vertices, 0);
    // vertex id = ((x*4)+y)*4+z for cubic (1 vertex per cell)
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 4; ++y)
            for (int z = 0; z < 4; ++z) region[(x * 4 + y) * 4 + z] = 1;
    auto mem = boundary_membrane(K, region);
    CHECK(mem.num_faces() == 32);
    CHECK(mem.num_vertices == 32);
    CHECK(mem.num_edges() == 64);
    CHECK(euler_characteristic(mem) == 0);
}

TEST_CASE("boundary membrane of an adjacent pair has 10 faces") {
    auto K = instantiate(gen::catalog("cubic"), {4, 4, 4});
    std::vector<std::uint8_t> region(K.num_vertices, 0);
    region[0] = 1;
    // neighbor along +z: cell (0,0,1)
    region[1] = 1;
    auto mem = boundary_membrane(K, region);
    CHECK(mem.num_faces() == 10);
    CHECK_THROWS_AS(boundary_membrane(K, std::vector<std::uint8_t>(K.num_vertices, 0)),
                    RegionError);
    CHECK_THROWS_AS(boundary_membrane(K, std::vector<std::uint8_t>(K.num_vertices, 1)),
                    RegionError);
}

TEST_CASE("orient_cycle rejects broken cycles") {
    std::vector<std::array<std::uint32_t, 2>> edges{{0, 1}, {1, 2}, {2, 3}};
    CHECK_THROWS_AS(orient_cycle({0, 1, 2}, edges), MalformedComplex);
}
