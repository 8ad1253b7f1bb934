#include "sl2/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace sl2 {

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    std::string s = buf;
    return s == "-0.00" ? "0.00" : s;
}

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string grid_text(const std::vector<std::vector<std::string>>& cells) {
    std::size_t width = 1;
    for (const auto& row : cells)
        for (const auto& c : row) width = std::max(width, c.size());
    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << pad_left(row[k], width);
        out << "\n";
    }
    return out.str();
}

std::vector<std::vector<std::string>> tiling_cells(const TilingWindow& w) {
    std::vector<std::vector<std::string>> cells;
    for (Index b = w.rows().lo; b <= w.rows().hi; ++b) {
        cells.emplace_back();
        for (Index v = w.cols().lo; v <= w.cols().hi; ++v) cells.back().push_back(to_decimal(w.at(b, v)));
    }
    return cells;
}

// Rows shifted right by their index, as in the usual frieze layout.
std::vector<std::vector<std::string>> frieze_cells(const FriezeWindow& f) {
    std::vector<std::vector<std::string>> cells;
    Index last = f.lo;
    for (const auto& [key, value] : f.entries) last = std::max(last, key.second);
    for (Index a = f.lo; a <= f.hi; ++a) {
        cells.emplace_back();
        for (Index d = f.lo; d <= last; ++d) cells.back().push_back(f.has(a, d) ? to_decimal(f.at(a, d)) : "");
    }
    return cells;
}

std::vector<Arc> drawn_arcs(const DiscFragment& f) {
    std::vector<Arc> arcs = f.diagonals;
    for (const auto& a : f.closing_sides()) arcs.push_back(a);
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    return arcs;
}

std::string fragment_ascii(const DiscFragment& f) {
    std::ostringstream out;
    out << "fragment " << f.shape.name() << "\n";
    out << "vertices " << f.boundary.size() << "\n";
    for (const auto& v : f.boundary) out << "  " << to_string(v) << "\n";
    const auto arcs = drawn_arcs(f);
    out << "arcs " << arcs.size() << "\n";
    for (const auto& a : arcs) out << "  " << to_string(a) << "\n";
    return out.str();
}

std::string certificate_ascii(const OnesCertificate& c) {
    std::ostringstream out;
    auto cells = [&](const std::vector<Cell>& xs) {
        for (const auto& [x, y] : xs) out << " (" << x << "," << y << ")";
        out << "\n";
    };
    out << "certificate" << (c.complete ? " complete" : "") << "\n";
    out << "zigzag" << (c.zigzag.left_bounded ? "" : " unbounded-sw") << (c.zigzag.right_bounded ? "" : " unbounded-ne")
        << ":";
    cells(c.zigzag.points);
    out << "p ones:";
    cells(c.p_ones);
    out << "q ones:";
    cells(c.q_ones);
    return out.str();
}

constexpr double kSize = 400.0;
constexpr double kCentre = kSize / 2;
constexpr double kRadius = 160.0;

struct Point {
    double x, y;
};

Point polar(double deg, double radius) {
    const double rad = deg * std::numbers::pi / 180.0;
    return {kCentre + radius * std::cos(rad), kCentre - radius * std::sin(rad)};
}

double sector_centre(Interval j) {
    switch (j) {
        case Interval::I: return 90;
        case Interval::II: return 180;
        case Interval::III: return 270;
        case Interval::IV: return 360;
    }
    return 0;
}

double vertex_angle(const DiscShape& shape, const Vertex& v) {
    const double half = 180.0 / shape.n;
    double centre = sector_centre(v.interval);
    if (shape.n == 2 && v.interval == Interval::III) centre = 270;
    const double spread = std::atan(static_cast<double>(v.index) / 4.0) / (std::numbers::pi / 2);
    return centre + 0.85 * half * spread;
}

std::vector<double> accumulation_angles(const DiscShape& shape) {
    std::vector<double> out;
    for (const auto j : shape.intervals) out.push_back(sector_centre(j) + 180.0 / shape.n);
    return out;
}

std::string svg_open(double w, double h) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) + "\" height=\"" + fmt(h) +
           "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\">\n";
}

std::string fragment_svg(const DiscFragment& f) {
    std::ostringstream out;
    out << svg_open(kSize, kSize);
    out << "<circle cx=\"" << fmt(kCentre) << "\" cy=\"" << fmt(kCentre) << "\" r=\"" << fmt(kRadius)
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double a : accumulation_angles(f.shape)) {
        const Point p = polar(a, kRadius);
        out << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
            << "\" r=\"4.00\" fill=\"white\" stroke=\"black\"/>\n";
    }
    for (const auto& v : f.boundary) {
        const double a = vertex_angle(f.shape, v);
        const Point p = polar(a, kRadius - 5), q = polar(a, kRadius + 5), t = polar(a, kRadius + 18);
        out << "<line x1=\"" << fmt(p.x) << "\" y1=\"" << fmt(p.y) << "\" x2=\"" << fmt(q.x) << "\" y2=\"" << fmt(q.y)
            << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << fmt(t.x) << "\" y=\"" << fmt(t.y)
            << "\" font-size=\"9\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << to_string(v) << "</text>\n";
    }
    for (const auto& arc : drawn_arcs(f)) {
        const double a = vertex_angle(f.shape, arc.lo()), b = vertex_angle(f.shape, arc.hi());
        const Point p = polar(a, kRadius), q = polar(b, kRadius);
        double gap = std::fabs(a - b);
        if (gap > 180) gap = 360 - gap;
        const double pull = 1.0 - gap / 180.0;
        const Point mid{(p.x + q.x) / 2, (p.y + q.y) / 2};
        const Point ctrl{kCentre + (mid.x - kCentre) * pull, kCentre + (mid.y - kCentre) * pull};
        out << "<path d=\"M " << fmt(p.x) << " " << fmt(p.y) << " Q " << fmt(ctrl.x) << " " << fmt(ctrl.y) << " "
            << fmt(q.x) << " " << fmt(q.y) << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string grid_svg(const std::vector<std::vector<std::string>>& cells, bool numeric = true) {
    const double step = 36;
    std::size_t cols = 0;
    for (const auto& row : cells) cols = std::max(cols, row.size());
    std::ostringstream out;
    out << svg_open(step * (cols + 1), step * (cells.size() + 1));
    for (std::size_t r = 0; r < cells.size(); ++r)
        for (std::size_t c = 0; c < cells[r].size(); ++c) {
            if (cells[r][c].empty()) continue;
            const double x = numeric ? step * (c + 1) : step / 2;
            out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(step * (r + 1)) << "\" font-size=\"12\" text-anchor=\""
                << (numeric ? "end" : "start") << "\">" << cells[r][c] << "</text>\n";
        }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render_ascii(const io::Payload& p) {
    if (const auto* f = std::get_if<DiscFragment>(&p)) return fragment_ascii(*f);
    if (const auto* w = std::get_if<TilingWindow>(&p)) return grid_text(tiling_cells(*w));
    if (const auto* f = std::get_if<FriezeWindow>(&p)) return grid_text(frieze_cells(*f));
    return certificate_ascii(std::get<OnesCertificate>(p));
}

std::string render_svg(const io::Payload& p) {
    if (const auto* f = std::get_if<DiscFragment>(&p)) return fragment_svg(*f);
    if (const auto* w = std::get_if<TilingWindow>(&p)) return grid_svg(tiling_cells(*w));
    if (const auto* f = std::get_if<FriezeWindow>(&p)) return grid_svg(frieze_cells(*f));
    std::vector<std::vector<std::string>> lines;
    std::istringstream in(certificate_ascii(std::get<OnesCertificate>(p)));
    for (std::string line; std::getline(in, line);) lines.push_back({line});
    return grid_svg(lines, false);
}

}  // namespace sl2
