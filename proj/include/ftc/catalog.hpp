#pragma once

#include <string>
#include <vector>

#include "ftc/complex.hpp"

namespace ftc::gen {

struct UnknownName : std::runtime_error {
    explicit UnknownName(const std::string& m) : std::runtime_error(m) {}
};

/// Built-in unit-cell templates. Fusion complexes: "cubic",
/// "alternated-cubic", "4-star", "pyrochlore". Counterexamples and
/// color-code inputs: "hexagonal-prism" (edges with three faces),
/// "bcc-bipyramid" (triangulated, 3-colorable vertices).
UnitCellTemplate catalog(const std::string& name);

std::vector<std::string> catalog_names();

/// Names of the Table-style fusion-complex entries only.
std::vector<std::string> fusion_catalog_names();

/// Closed-surface fixtures for the 2d machinery.
CellComplex tetrahedron_surface();
CellComplex octahedron_surface();
CellComplex cube_surface();
CellComplex square_torus_2d(int lx, int ly);
/// One vertex, two loops, one square face.
CellComplex one_vertex_torus_2d();

}  // namespace ftc::gen
