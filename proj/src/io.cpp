#include "sl2/io.hpp"

#include "sl2/error.hpp"

#include <fstream>
#include <sstream>

namespace sl2::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

Index index_of(const Json& j) {
    if (!j.is_number_integer()) bad("expected an integer index");
    return j.get<Index>();
}

BigInt big_of(const Json& j) {
    if (!j.is_string()) bad("expected a decimal string");
    return parse_decimal(j.get<std::string>());
}

Json range_json(const IndexRange& r) { return {{"lo", r.lo}, {"hi", r.hi}}; }

IndexRange range_of(const Json& j) {
    IndexRange r{index_of(field(j, "lo")), index_of(field(j, "hi"))};
    if (r.hi < r.lo) bad("empty index range");
    return r;
}

Json cells_json(const std::vector<Cell>& cells) {
    Json out = Json::array();
    for (const auto& [x, y] : cells) out.push_back({x, y});
    return out;
}

std::vector<Cell> cells_of(const Json& j) {
    if (!j.is_array()) bad("expected a list of cells");
    std::vector<Cell> out;
    for (const auto& c : j) {
        if (!c.is_array() || c.size() != 2) bad("a cell is a pair of integers");
        out.emplace_back(index_of(c[0]), index_of(c[1]));
    }
    return out;
}

bool bool_of(const Json& j) {
    if (!j.is_boolean()) bad("expected a boolean");
    return j.get<bool>();
}

DiscShape shape_of(const Json& j) {
    if (!j.is_string()) bad("shape must be a string");
    const auto s = j.get<std::string>();
    for (const auto& shape : {DiscShape::d2(), DiscShape::d3_with_II(), DiscShape::d3_with_IV(), DiscShape::d4()})
        if (shape.name() == s) return shape;
    bad("unknown shape '" + s + "'");
}

}  // namespace

Json to_json(const Vertex& v) { return {{"interval", to_string(v.interval)}, {"index", v.index}}; }

Json to_json(const Arc& a) { return Json::array({to_json(a.lo()), to_json(a.hi())}); }

Json to_json(const DiscFragment& f) {
    Json boundary = Json::array(), diagonals = Json::array();
    for (const auto& v : f.boundary) boundary.push_back(to_json(v));
    for (const auto& a : f.diagonals) diagonals.push_back(to_json(a));
    return {{"shape", f.shape.name()}, {"boundary", boundary}, {"diagonals", diagonals}};
}

Json to_json(const TilingWindow& w) {
    Json rows = Json::array();
    for (Index b = w.rows().lo; b <= w.rows().hi; ++b) {
        Json row = Json::array();
        for (Index v = w.cols().lo; v <= w.cols().hi; ++v) row.push_back(to_decimal(w.at(b, v)));
        rows.push_back(row);
    }
    return {{"rows", range_json(w.rows())}, {"cols", range_json(w.cols())}, {"entries", rows}};
}

Json to_json(const FriezeWindow& f) {
    Json rows = Json::array();
    for (Index a = f.lo; a <= f.hi; ++a) {
        Json values = Json::array();
        for (Index d = a; f.has(a, d); ++d) values.push_back(to_decimal(f.at(a, d)));
        if (!values.empty()) rows.push_back({{"a", a}, {"values", values}});
    }
    return {{"kind", f.kind == FriezeKind::FiniteCC ? "finite-cc" : "infinite"},
            {"lo", f.lo},
            {"hi", f.hi},
            {"depth", f.depth},
            {"period", f.period},
            {"rows", rows}};
}

Json to_json(const OnesCertificate& c) {
    return {{"zigzag",
             {{"points", cells_json(c.zigzag.points)},
              {"left_bounded", c.zigzag.left_bounded},
              {"right_bounded", c.zigzag.right_bounded}}},
            {"p_ones", cells_json(c.p_ones)},
            {"q_ones", cells_json(c.q_ones)},
            {"complete", c.complete}};
}

Vertex vertex_from_json(const Json& j) {
    const auto& iv = field(j, "interval");
    if (!iv.is_string()) bad("interval must be a string");
    try {
        return {interval_from_string(iv.get<std::string>()), index_of(field(j, "index"))};
    } catch (const Error& e) {
        bad(e.what());
    }
}

Arc arc_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) bad("an arc is a pair of vertices");
    const Vertex x = vertex_from_json(j[0]), y = vertex_from_json(j[1]);
    if (x == y) bad("an arc needs two distinct endpoints");
    return Arc(x, y);
}

DiscFragment fragment_from_json(const Json& j) {
    DiscFragment f;
    f.shape = shape_of(field(j, "shape"));
    const auto& boundary = field(j, "boundary");
    const auto& diagonals = field(j, "diagonals");
    if (!boundary.is_array() || !diagonals.is_array()) bad("boundary and diagonals must be lists");
    for (const auto& v : boundary) f.boundary.push_back(vertex_from_json(v));
    for (const auto& a : diagonals) f.diagonals.push_back(arc_from_json(a));
    return f;
}

TilingWindow tiling_from_json(const Json& j) {
    const IndexRange rows = range_of(field(j, "rows"));
    const IndexRange cols = range_of(field(j, "cols"));
    const auto& entries = field(j, "entries");
    if (!entries.is_array()) bad("entries must be a list of rows");
    std::vector<std::vector<BigInt>> values;
    for (const auto& row : entries) {
        if (!row.is_array()) bad("each row must be a list");
        values.emplace_back();
        for (const auto& x : row) values.back().push_back(big_of(x));
    }
    try {
        return TilingWindow::from_rows(rows, cols, values);
    } catch (const Error& e) {
        bad(e.what());
    }
}

FriezeWindow frieze_from_json(const Json& j) {
    FriezeWindow f;
    const auto& kind = field(j, "kind");
    if (kind == "finite-cc")
        f.kind = FriezeKind::FiniteCC;
    else if (kind == "infinite")
        f.kind = FriezeKind::Infinite;
    else
        bad("unknown frieze kind");
    f.lo = index_of(field(j, "lo"));
    f.hi = index_of(field(j, "hi"));
    f.depth = index_of(field(j, "depth"));
    f.period = index_of(field(j, "period"));
    const auto& rows = field(j, "rows");
    if (!rows.is_array()) bad("rows must be a list");
    for (const auto& row : rows) {
        const Index a = index_of(field(row, "a"));
        const auto& values = field(row, "values");
        if (!values.is_array()) bad("values must be a list");
        for (std::size_t k = 0; k < values.size(); ++k) f.set(a, a + static_cast<Index>(k), big_of(values[k]));
    }
    return f;
}

OnesCertificate certificate_from_json(const Json& j) {
    OnesCertificate c;
    const auto& z = field(j, "zigzag");
    c.zigzag.points = cells_of(field(z, "points"));
    c.zigzag.left_bounded = bool_of(field(z, "left_bounded"));
    c.zigzag.right_bounded = bool_of(field(z, "right_bounded"));
    c.p_ones = cells_of(field(j, "p_ones"));
    c.q_ones = cells_of(field(j, "q_ones"));
    c.complete = bool_of(field(j, "complete"));
    return c;
}

std::string payload_kind(const Payload& p) {
    switch (p.index()) {
        case 0: return "fragment";
        case 1: return "tiling_window";
        case 2: return "frieze_window";
        default: return "certificate";
    }
}

Json manifest(const Payload& p) {
    Json body = std::visit([](const auto& x) { return to_json(x); }, p);
    return {{"format_version", kFormatVersion}, {"payload_kind", payload_kind(p)}, {"payload", body}};
}

Payload from_manifest(const Json& j) {
    const auto& version = field(j, "format_version");
    if (version != kFormatVersion) bad("unsupported format_version");
    const auto& kind = field(j, "payload_kind");
    const auto& body = field(j, "payload");
    if (kind == "fragment") return fragment_from_json(body);
    if (kind == "tiling_window") return tiling_from_json(body);
    if (kind == "frieze_window") return frieze_from_json(body);
    if (kind == "certificate") return certificate_from_json(body);
    bad("unknown payload_kind");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string serialize(const Payload& p) { return dump(manifest(p)); }

Payload parse(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
    try {
        return from_manifest(j);
    } catch (const Json::exception& e) {
        bad(std::string("malformed manifest: ") + e.what());
    }
}

Payload read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

void write_file(const std::string& path, const Payload& p) {
    std::ofstream out(path, std::ios::binary);
    if (!out) bad("cannot write '" + path + "'");
    out << serialize(p);
}

}  // namespace sl2::io
