#pragma once

#include <string>
#include <variant>

#include "ftc/complex.hpp"

// JSON interchange format for complexes. Fields: name, dims (optional),
// vertices, edges ([[v,[dx,dy,dz]],[v,[dx,dy,dz]]]), faces (ordered
// [e,offset] lists), cells ([[f,offset] lists]), embedding (optional).
// A document with offsets and/or dims is a unit-cell template; one with
// all offsets zero and no dims is an explicit complex. A document without
// cells is a 2d complex.

namespace ftc::gen {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};
struct ConsistencyError : std::runtime_error {
    explicit ConsistencyError(const std::string& m) : std::runtime_error(m) {}
};

using Interchange = std::variant<UnitCellTemplate, CellComplex>;

Interchange parse_interchange(const std::string& text);

std::string export_interchange(const UnitCellTemplate& tmpl);
std::string export_interchange(const CellComplex& K);

}  // namespace ftc::gen
