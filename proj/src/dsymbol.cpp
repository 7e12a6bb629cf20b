#include "ftc/dsymbol.hpp"

#include <cctype>
#include <sstream>

namespace ftc::gen {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<int> parse_ints(const std::string& s, const std::string& where) {
    std::vector<int> out;
    std::istringstream in(strip(s));
    std::string tok;
    while (in >> tok) {
        for (char c : tok)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError(where + ": not a positive integer: '" + tok + "'");
        long v = std::stol(tok);
        if (v < 1) throw ParseError(where + ": integers must be positive");
        out.push_back(static_cast<int>(v));
    }
    if (out.empty()) throw ParseError(where + ": empty section");
    return out;
}

}  // namespace

DSymbolRecord parse_dsymbol(const std::string& text) {
    std::string s = strip(text);
    if (s.size() < 2 || s.front() != '<' || s.back() != '>')
        throw ParseError("D-symbol must be enclosed in <...>");
    std::string body = s.substr(1, s.size() - 2);

    auto sections = split(body, ':');
    if (sections.size() != 3)
        throw ParseError("D-symbol needs three colon-separated parts, got " +
                         std::to_string(sections.size()));

    auto header = parse_ints(sections[0], "header");
    if (header.size() != 2) throw ParseError("header must be exactly 'size dim'");

    DSymbolRecord rec;
    rec.size = header[0];
    rec.dim = header[1];
    rec.source = s;
    if (rec.dim < 1 || rec.dim > 4) throw ParseError("dimension out of range");

    auto ops = split(sections[1], ',');
    if (static_cast<int>(ops.size()) != rec.dim + 1)
        throw ParseError("expected " + std::to_string(rec.dim + 1) + " op sections, got " +
                         std::to_string(ops.size()));
    for (std::size_t i = 0; i < ops.size(); ++i) {
        auto lst = parse_ints(ops[i], "op section " + std::to_string(i));
        for (int v : lst)
            if (v > rec.size)
                throw ParseError("op section " + std::to_string(i) + ": chamber index " +
                                 std::to_string(v) + " exceeds size " + std::to_string(rec.size));
        if (static_cast<int>(lst.size()) > rec.size)
            throw ParseError("op section " + std::to_string(i) + " longer than size");
        rec.op_lists.push_back(std::move(lst));
    }

    auto ms = split(sections[2], ',');
    if (static_cast<int>(ms.size()) != rec.dim)
        throw ParseError("expected " + std::to_string(rec.dim) + " m sections, got " +
                         std::to_string(ms.size()));
    for (std::size_t i = 0; i < ms.size(); ++i)
        rec.m_lists.push_back(parse_ints(ms[i], "m section " + std::to_string(i)));

    return rec;
}

}  // namespace ftc::gen
