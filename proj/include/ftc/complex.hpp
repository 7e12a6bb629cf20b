#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Explicit finite cell complexes (2d surfaces and 3d complexes on the
// 3-torus) with incidence maps, plus periodic unit-cell templates that
// unroll onto the torus. Incidences are multisets: at small periods an
// element can touch the same lower-rank element more than once, and every
// predicate counts with multiplicity.

namespace ftc {

struct DimsTooSmall : std::runtime_error {
    explicit DimsTooSmall(const std::string& m) : std::runtime_error(m) {}
};
struct MalformedTemplate : std::runtime_error {
    explicit MalformedTemplate(const std::string& m) : std::runtime_error(m) {}
};
struct MalformedComplex : std::runtime_error {
    explicit MalformedComplex(const std::string& m) : std::runtime_error(m) {}
};
struct NotBicolorable : std::runtime_error {
    explicit NotBicolorable(const std::string& m) : std::runtime_error(m) {}
};
struct NotAClosedSurface : std::runtime_error {
    explicit NotAClosedSurface(const std::string& m) : std::runtime_error(m) {}
};
struct RegionError : std::runtime_error {
    explicit RegionError(const std::string& m) : std::runtime_error(m) {}
};

/// Directed occurrence of an edge inside a face cycle.
struct DirEdge {
    std::uint32_t edge;
    bool rev;  // true: traversed head->tail relative to stored endpoints
};

class CellComplex {
public:
    std::string name;
    std::array<int, 3> dims{0, 0, 0};  // provenance; {0,0,0} for explicit complexes
    int unit_multiplicity = 1;         // template cell = this many structural unit cells
    int dim = 3;                       // 2 for closed surfaces, 3 for torus complexes

    std::size_t num_vertices = 0;
    std::vector<std::array<std::uint32_t, 2>> edges;
    std::vector<std::vector<DirEdge>> faces;          // directed closed cycles
    std::vector<std::vector<std::uint32_t>> cells;    // face multisets (empty for dim 2)
    std::vector<std::array<double, 3>> embedding;     // optional, per vertex

    // Derived incidences, built by finalize().
    std::vector<std::vector<std::uint32_t>> vertex_edges;
    std::vector<std::vector<std::uint32_t>> edge_faces;  // with multiplicity
    std::vector<std::vector<std::uint32_t>> face_cells;  // with multiplicity

    std::uint32_t edge_tail(DirEdge d) const { return edges[d.edge][d.rev ? 1 : 0]; }
    std::uint32_t edge_head(DirEdge d) const { return edges[d.edge][d.rev ? 0 : 1]; }

    std::size_t num_edges() const { return edges.size(); }
    std::size_t num_faces() const { return faces.size(); }
    std::size_t num_cells() const { return cells.size(); }

    /// Vertex cycle of a face (tails of its directed edges).
    std::vector<std::uint32_t> face_vertices(std::uint32_t f) const;

    /// Checks cycle consistency and builds the incidence maps.
    void finalize();

    /// Edge count of a cell, with multiplicity mod nothing (raw count / 2 pairs).
    std::size_t cell_edge_count(std::uint32_t c) const;

    /// Distinct + multiplicity count of edge occurrences per cell.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cell_edge_multiset(std::uint32_t c) const;
};

/// Orient an undirected edge cycle into a consistent directed walk.
/// Throws MalformedComplex if no consistent orientation exists.
std::vector<DirEdge> orient_cycle(const std::vector<std::uint32_t>& cycle,
                                  const std::vector<std::array<std::uint32_t, 2>>& edges);

// ---------------------------------------------------------------------------
// Unit-cell templates

struct TemplateRef {
    std::uint32_t idx;
    std::array<int, 3> off;
};

struct UnitCellTemplate {
    std::string name;
    int dim = 3;
    int unit_multiplicity = 1;  // structural unit cells per template cell
    std::size_t num_vertices = 0;
    std::vector<std::array<double, 3>> vertex_pos;  // fractional coords, may be empty
    std::vector<std::array<TemplateRef, 2>> edges;
    std::vector<std::vector<TemplateRef>> faces;  // ordered edge refs
    std::vector<std::vector<TemplateRef>> cells;  // face refs

    void check_labels() const;  // throws MalformedTemplate on dangling refs
};

/// Unroll a periodic template onto the (Lx,Ly,Lz) torus. Element ids are
/// ordered by (row-major unit-cell index, template-local index).
CellComplex instantiate(const UnitCellTemplate& tmpl, std::array<int, 3> dims);

// ---------------------------------------------------------------------------
// Predicates and colorings

struct Violation {
    std::string rule;
    std::int64_t element;
    std::string detail;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;
    std::vector<std::string> notes;  // informational, never affect validity

    void fail(std::string rule, std::int64_t element, std::string detail) {
        valid = false;
        violations.push_back({std::move(rule), element, std::move(detail)});
    }
};

/// Def.: every edge has exactly four incident faces (with multiplicity).
ValidationReport validate_fusion_complex(const CellComplex& K);

/// ∂∘∂ = 0 over GF(2): each cell's faces cover every edge an even number
/// of times, and each face cycle is closed (checked at finalize).
bool boundary_of_boundary_zero(const CellComplex& K);

/// V - E + F - C (V - E + F in 2d).
long long euler_characteristic(const CellComplex& K);

enum class CheckType : std::uint8_t { X = 0, Z = 1 };

inline char check_type_name(CheckType t) { return t == CheckType::X ? 'X' : 'Z'; }

struct CellColoring {
    std::vector<CheckType> color;  // by cell id
};

struct VertexColoring {
    std::vector<std::uint8_t> color;  // by vertex id
};

/// Proper 2-coloring of 3-cells under face adjacency; deterministic
/// (lowest cell id of each component gets X). Throws NotBicolorable.
CellColoring bicolor_cells(const CellComplex& K);

/// Proper 2-coloring of vertices under edge adjacency. Throws NotBicolorable.
VertexColoring bicolor_vertices(const CellComplex& K);

/// Proper 2-coloring of the faces of a 2d complex under edge adjacency.
std::vector<std::uint8_t> bicolor_faces_2d(const CellComplex& M);

bool is_proper_cell_coloring(const CellComplex& K, const CellColoring& col);

// ---------------------------------------------------------------------------
// 2d constructions

/// Medial construction: Kitaev form (qubits on edges) -> plaquette form
/// (one 4-valent vertex per input edge, faces 2-colorable for closed
/// surfaces). Input must be a closed 2d complex.
CellComplex medial_plaquette(const CellComplex& M);

/// The closed 2d membrane of dual faces crossing the cut around a vertex
/// region: one face per edge with exactly one endpoint in the region.
CellComplex boundary_membrane(const CellComplex& K, const std::vector<std::uint8_t>& in_region);

/// Cut edges of a region (exactly one endpoint inside).
std::vector<std::uint32_t> cut_edges(const CellComplex& K, const std::vector<std::uint8_t>& in_region);

}  // namespace ftc
