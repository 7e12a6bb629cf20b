#pragma once

#include <string>
#include <vector>

#include "ftc/interchange.hpp"

// Syntax-level parser for D-symbols (<size dim:op sections:m sections>).
// Symbols are validated for shape and arity only; no tiling expansion.

namespace ftc::gen {

struct DSymbolRecord {
    int size = 0;
    int dim = 0;
    std::vector<std::vector<int>> op_lists;  // dim + 1 sections
    std::vector<std::vector<int>> m_lists;   // dim sections
    std::string source;
};

DSymbolRecord parse_dsymbol(const std::string& text);  // throws ParseError

}  // namespace ftc::gen
