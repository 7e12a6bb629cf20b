#include "ftc/interchange.hpp"

#include <json.hpp>

namespace ftc::gen {

namespace {

using nlohmann::json;

std::array<int, 3> parse_offset(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3)
        throw ParseError(where + ": offset must be a 3-element integer array");
    std::array<int, 3> off;
    for (int i = 0; i < 3; ++i) {
        if (!j[i].is_number_integer()) throw ParseError(where + ": offsets must be integers");
        off[i] = j[i].get<int>();
    }
    return off;
}

TemplateRef parse_ref(const json& j, std::size_t limit, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError(where + ": reference must be [index, offset]");
    if (!j[0].is_number_integer() || j[0].get<long long>() < 0)
        throw ParseError(where + ": reference index must be a non-negative integer");
    TemplateRef r;
    r.idx = j[0].get<std::uint32_t>();
    r.off = parse_offset(j[1], where);
    if (r.idx >= limit)
        throw ConsistencyError(where + ": reference to missing element " + std::to_string(r.idx));
    return r;
}

}  // namespace

Interchange parse_interchange(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document must be a JSON object");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw ParseError("missing vertices array");
    if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError("missing edges array");
    if (!doc.contains("faces") || !doc["faces"].is_array()) throw ParseError("missing faces array");

    UnitCellTemplate t;
    t.name = doc.value("name", std::string("unnamed"));
    t.num_vertices = doc["vertices"].size();

    bool has_cells = doc.contains("cells") && doc["cells"].is_array() && !doc["cells"].empty();
    t.dim = has_cells ? 3 : 2;

    if (doc.contains("embedding")) {
        const auto& emb = doc["embedding"];
        if (!emb.is_array() || emb.size() != t.num_vertices)
            throw ParseError("embedding must list one coordinate triple per vertex");
        for (const auto& c : emb) {
            if (!c.is_array() || c.size() != 3) throw ParseError("embedding entries must be triples");
            t.vertex_pos.push_back({c[0].get<double>(), c[1].get<double>(), c[2].get<double>()});
        }
    }

    bool any_offset = false;
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
        const auto& je = doc["edges"][i];
        std::string where = "edge " + std::to_string(i);
        if (!je.is_array() || je.size() != 2) throw ParseError(where + ": must be two references");
        auto a = parse_ref(je[0], t.num_vertices, where);
        auto b = parse_ref(je[1], t.num_vertices, where);
        any_offset |= a.off != std::array<int, 3>{0, 0, 0} || b.off != std::array<int, 3>{0, 0, 0};
        t.edges.push_back({a, b});
    }
    for (std::size_t i = 0; i < doc["faces"].size(); ++i) {
        const auto& jf = doc["faces"][i];
        std::string where = "face " + std::to_string(i);
        if (!jf.is_array() || jf.empty()) throw ParseError(where + ": must be a reference list");
        std::vector<TemplateRef> cyc;
        for (const auto& r : jf) {
            auto ref = parse_ref(r, t.edges.size(), where);
            any_offset |= ref.off != std::array<int, 3>{0, 0, 0};
            cyc.push_back(ref);
        }
        t.faces.push_back(std::move(cyc));
    }
    if (has_cells) {
        for (std::size_t i = 0; i < doc["cells"].size(); ++i) {
            const auto& jc = doc["cells"][i];
            std::string where = "cell " + std::to_string(i);
            if (!jc.is_array() || jc.empty()) throw ParseError(where + ": must be a reference list");
            std::vector<TemplateRef> fs;
            for (const auto& r : jc) {
                auto ref = parse_ref(r, t.faces.size(), where);
                any_offset |= ref.off != std::array<int, 3>{0, 0, 0};
                fs.push_back(ref);
            }
            t.cells.push_back(std::move(fs));
        }
    }

    if (doc.contains("dims") || any_offset) {
        return t;  // unit-cell template
    }

    // explicit complex: all offsets zero
    CellComplex K;
    K.dim = t.dim;
    K.name = t.name;
    K.num_vertices = t.num_vertices;
    for (const auto& e : t.edges) K.edges.push_back({e[0].idx, e[1].idx});
    for (std::size_t f = 0; f < t.faces.size(); ++f) {
        std::vector<std::uint32_t> cyc;
        for (const auto& r : t.faces[f]) cyc.push_back(r.idx);
        try {
            K.faces.push_back(orient_cycle(cyc, K.edges));
        } catch (const MalformedComplex&) {
            throw ConsistencyError("face " + std::to_string(f) + ": edge cycle is not closed");
        }
    }
    for (const auto& c : t.cells) {
        std::vector<std::uint32_t> fs;
        for (const auto& r : c) fs.push_back(r.idx);
        std::sort(fs.begin(), fs.end());
        K.cells.push_back(std::move(fs));
    }
    K.embedding.assign(t.vertex_pos.begin(), t.vertex_pos.end());
    try {
        K.finalize();
    } catch (const MalformedComplex& e) {
        throw ConsistencyError(e.what());
    }
    return K;
}

namespace {

json ref_json(std::uint32_t idx, std::array<int, 3> off) {
    return json::array({idx, json::array({off[0], off[1], off[2]})});
}

}  // namespace

std::string export_interchange(const UnitCellTemplate& t) {
    json doc;
    doc["name"] = t.name;
    doc["vertices"] = json::array();
    for (std::size_t v = 0; v < t.num_vertices; ++v) doc["vertices"].push_back(v);
    doc["edges"] = json::array();
    for (const auto& e : t.edges)
        doc["edges"].push_back(json::array({ref_json(e[0].idx, e[0].off), ref_json(e[1].idx, e[1].off)}));
    doc["faces"] = json::array();
    for (const auto& f : t.faces) {
        json jf = json::array();
        for (const auto& r : f) jf.push_back(ref_json(r.idx, r.off));
        doc["faces"].push_back(jf);
    }
    if (t.dim == 3) {
        doc["cells"] = json::array();
        for (const auto& c : t.cells) {
            json jc = json::array();
            for (const auto& r : c) jc.push_back(ref_json(r.idx, r.off));
            doc["cells"].push_back(jc);
        }
    }
    if (!t.vertex_pos.empty()) {
        doc["embedding"] = json::array();
        for (const auto& p : t.vertex_pos) doc["embedding"].push_back(json::array({p[0], p[1], p[2]}));
    }
    doc["dims"] = json::array({2, 2, 2});  // default instantiation hint
    return doc.dump(2);
}

std::string export_interchange(const CellComplex& K) {
    json doc;
    doc["name"] = K.name;
    doc["vertices"] = json::array();
    for (std::size_t v = 0; v < K.num_vertices; ++v) doc["vertices"].push_back(v);
    doc["edges"] = json::array();
    for (const auto& e : K.edges)
        doc["edges"].push_back(json::array({ref_json(e[0], {0, 0, 0}), ref_json(e[1], {0, 0, 0})}));
    doc["faces"] = json::array();
    for (const auto& f : K.faces) {
        json jf = json::array();
        for (const auto& d : f) jf.push_back(ref_json(d.edge, {0, 0, 0}));
        doc["faces"].push_back(jf);
    }
    if (K.dim == 3) {
        doc["cells"] = json::array();
        for (const auto& c : K.cells) {
            json jc = json::array();
            for (auto fid : c) jc.push_back(ref_json(fid, {0, 0, 0}));
            doc["cells"].push_back(jc);
        }
    }
    if (!K.embedding.empty()) {
        doc["embedding"] = json::array();
        for (const auto& p : K.embedding) doc["embedding"].push_back(json::array({p[0], p[1], p[2]}));
    }
    return doc.dump(2);
}

}  // namespace ftc::gen
