#include "sl2/theta_defects.hpp"

#include "sl2/error.hpp"

#include <algorithm>
#include <functional>

namespace sl2 {

namespace {

std::string cell_name(const Cell& c) {
    return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
}

void require_size(const TilingWindow& w) {
    if (w.rows().size() < 2 || w.cols().size() < 2)
        throw Error(ErrorCode::WindowTooSmall, "Theta needs a window of at least 2x2");
}

BigInt p_at(const TilingWindow& w, Index a, Index d) { return p_from_columns(w, a, d, w.cols().lo); }
BigInt q_at(const TilingWindow& w, Index u, Index x) { return q_from_rows(w, u, x, w.rows().lo); }

std::set<Cell> window_ones(const TilingWindow& w) {
    std::set<Cell> out;
    for (Index b = w.rows().lo; b <= w.rows().hi; ++b)
        for (Index v = w.cols().lo; v <= w.cols().hi; ++v)
            if (w.at(b, v) == 1) out.emplace(b, v);
    return out;
}

std::set<Cell> window_p_ones(const TilingWindow& w) {
    std::set<Cell> out;
    const auto& r = w.rows();
    for (Index a = r.lo; a <= r.hi; ++a)
        for (Index d = a + 2; d <= r.hi; ++d)
            if (p_at(w, a, d) == 1) out.emplace(a, d);
    return out;
}

std::set<Cell> window_q_ones(const TilingWindow& w) {
    std::set<Cell> out;
    const auto& c = w.cols();
    for (Index u = c.lo; u <= c.hi; ++u)
        for (Index x = u + 2; x <= c.hi; ++x)
            if (q_at(w, u, x) == 1) out.emplace(u, x);
    return out;
}

void check_listed(const std::vector<Cell>& listed, const std::set<Cell>& seen, bool both_in,
                  const std::function<bool(const Cell&)>& visible, bool complete, const std::string& what) {
    std::set<Cell> listed_set(listed.begin(), listed.end());
    for (const auto& c : listed) {
        if (both_in && c.second < c.first + 2)
            throw Error(ErrorCode::InconsistentCertificate, what + " entry " + cell_name(c) + " is not internal");
        if (visible(c) && !seen.count(c))
            throw Error(ErrorCode::InconsistentCertificate, what + " entry " + cell_name(c) + " is not 1 in the window");
    }
    if (complete)
        for (const auto& c : seen)
            if (!listed_set.count(c))
                throw Error(ErrorCode::InconsistentCertificate,
                            "complete certificate omits the " + what + " entry " + cell_name(c));
}

void check_non_crossing(const ThetaSet& theta) {
    const auto arcs = theta.all();
    const std::vector<Arc> list(arcs.begin(), arcs.end());
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = i + 1; j < list.size(); ++j)
            if (chords_cross(list[i], list[j]))
                throw Error(ErrorCode::CrossingDetected, to_string(list[i]) + " crosses " + to_string(list[j]));
}

bool in_scope(const ThetaSet& theta, const Vertex& v) {
    if (v.interval == Interval::I) return theta.scope.rows.contains(v.index);
    if (v.interval == Interval::III) return theta.scope.cols.contains(v.index);
    return false;
}

bool window_arc(const ThetaSet& theta, const Arc& a) { return in_scope(theta, a.lo()) && in_scope(theta, a.hi()); }

bool covered(const ThetaSet& theta, const Vertex& v, bool window_only) {
    const auto& internal = v.interval == Interval::I ? theta.internal_I : theta.internal_III;
    for (const auto& a : internal) {
        if (window_only && !window_arc(theta, a)) continue;
        if (a.lo().index < v.index && v.index < a.hi().index) return true;
    }
    // Connecting arcs nest: larger b pairs with smaller v.
    bool below = false, above = false;
    for (const auto& a : theta.connecting) {
        if (window_only && !window_arc(theta, a)) continue;
        const Index x = v.interval == Interval::I ? a.lo().index : a.hi().index;
        if (x < v.index) below = true;
        if (x > v.index) above = true;
    }
    return below && above;
}

void require_on_I_or_III(const Vertex& v) {
    if (v.interval != Interval::I && v.interval != Interval::III)
        throw Error(ErrorCode::OutOfScope, to_string(v) + " is not on interval I or III");
}

}  // namespace

std::set<Arc> ThetaSet::all() const {
    std::set<Arc> out = connecting;
    out.insert(internal_I.begin(), internal_I.end());
    out.insert(internal_III.begin(), internal_III.end());
    return out;
}

std::vector<Arc> ThetaSet::arcs_at(const Vertex& v) const {
    std::vector<Arc> out;
    for (const auto* family : {&connecting, &internal_I, &internal_III})
        for (const auto& a : *family)
            if (a.has(v)) out.push_back(a);
    return out;
}

ThetaSet build_theta(const TilingWindow& w, const OnesCertificate& cert) {
    require_size(w);
    if (!is_zigzag_shaped(cert.zigzag.points))
        throw Error(ErrorCode::InconsistentCertificate, "certificate points do not form a zig-zag");
    const auto ones = window_ones(w);
    const auto p_ones = window_p_ones(w);
    const auto q_ones = window_q_ones(w);
    const auto& r = w.rows();
    const auto& c = w.cols();
    check_listed(cert.zigzag.points, ones, false, [&](const Cell& x) { return w.contains(x.first, x.second); },
                 cert.complete, "t");
    check_listed(cert.p_ones, p_ones, true, [&](const Cell& x) { return r.contains(x.first) && r.contains(x.second); },
                 cert.complete, "p");
    check_listed(cert.q_ones, q_ones, true, [&](const Cell& x) { return c.contains(x.first) && c.contains(x.second); },
                 cert.complete, "q");

    ThetaSet theta;
    theta.scope = {r, c, cert.complete, false};
    for (const auto& [b, v] : ones) theta.connecting.emplace(vI(b), vIII(v));
    for (const auto& [b, v] : cert.zigzag.points) theta.connecting.emplace(vI(b), vIII(v));
    for (const auto& [a, d] : p_ones) theta.internal_I.emplace(vI(a), vI(d));
    for (const auto& [a, d] : cert.p_ones) theta.internal_I.emplace(vI(a), vI(d));
    for (const auto& [u, x] : q_ones) theta.internal_III.emplace(vIII(u), vIII(x));
    for (const auto& [u, x] : cert.q_ones) theta.internal_III.emplace(vIII(u), vIII(x));
    check_non_crossing(theta);
    return theta;
}

ThetaSet window_theta(const TilingWindow& w) {
    require_size(w);
    ThetaSet theta;
    theta.scope = {w.rows(), w.cols(), true, true};
    for (const auto& [b, v] : window_ones(w)) theta.connecting.emplace(vI(b), vIII(v));
    for (const auto& [a, d] : window_p_ones(w)) theta.internal_I.emplace(vI(a), vI(d));
    for (const auto& [u, x] : window_q_ones(w)) theta.internal_III.emplace(vIII(u), vIII(x));
    check_non_crossing(theta);
    return theta;
}

Saturation saturation(const ThetaSet& theta, const Vertex& v) {
    require_on_I_or_III(v);
    if (!in_scope(theta, v)) throw Error(ErrorCode::OutOfScope, to_string(v) + " is outside the window");
    return covered(theta, v, false) ? Saturation::Saturated : Saturation::NonSaturated;
}

bool in_margin(const ThetaSet& theta, const Vertex& v) {
    if (!in_scope(theta, v)) return false;
    if (theta.scope.closed || theta.scope.complete) return true;
    return covered(theta, v, true);
}

BigInt raw_defect(const TilingWindow& w, const ThetaSet& theta, const Vertex& v) {
    require_on_I_or_III(v);
    const auto& range = v.interval == Interval::I ? w.rows() : w.cols();
    if (v.index <= range.lo || v.index >= range.hi)
        throw Error(ErrorCode::InsufficientMargin, to_string(v) + " is not interior to the window");
    if (!in_margin(theta, v))
        throw Error(ErrorCode::InsufficientMargin, "Theta arcs at " + to_string(v) + " may leave the window");
    const BigInt quid = v.interval == Interval::I ? p_at(w, v.index - 1, v.index + 1) : q_at(w, v.index - 1, v.index + 1);
    const BigInt out = quid - 1 - static_cast<long>(theta.arcs_at(v).size());
    if (out < 0) throw Error(ErrorCode::InconsistentCertificate, "negative defect at " + to_string(v));
    return out;
}

DefectMap defects(const TilingWindow& w, const ThetaSet& theta) {
    DefectMap out;
    for (Index b = w.rows().lo + 1; b < w.rows().hi; ++b)
        if (in_margin(theta, vI(b))) out.def_p[b] = raw_defect(w, theta, vI(b));
    for (Index v = w.cols().lo + 1; v < w.cols().hi; ++v)
        if (in_margin(theta, vIII(v))) out.def_q[v] = raw_defect(w, theta, vIII(v));
    return out;
}

DefectMap defects(const TilingWindow& w, const OnesCertificate& cert) { return defects(w, build_theta(w, cert)); }

ArcOrEdge longest_arc(const ThetaSet& theta, const Vertex& v, Direction dir) {
    require_on_I_or_III(v);
    if (!in_margin(theta, v))
        throw Error(ErrorCode::InsufficientMargin, "Theta arcs at " + to_string(v) + " may leave the window");
    const auto& internal = v.interval == Interval::I ? theta.internal_I : theta.internal_III;
    std::optional<Arc> best;
    for (const auto& a : internal) {
        if (!a.has(v)) continue;
        const Index x = a.other(v).index;
        if (dir == Direction::Clockwise && x < v.index && (!best || x < best->other(v).index)) best = a;
        if (dir == Direction::Anticlockwise && x > v.index && (!best || x > best->other(v).index)) best = a;
    }
    if (best) return {*best, false};
    const Index step = dir == Direction::Clockwise ? -1 : 1;
    return {Arc(v, {v.interval, v.index + step}), true};
}

std::optional<BigInt> internal_defect_formula(const TilingWindow& w, const ThetaSet& theta, const Vertex& v) {
    require_on_I_or_III(v);
    if (!in_margin(theta, v)) return std::nullopt;
    for (const auto& a : theta.connecting)
        if (a.has(v)) return std::nullopt;
    const Index lo = longest_arc(theta, v, Direction::Clockwise).arc.other(v).index;
    const Index hi = longest_arc(theta, v, Direction::Anticlockwise).arc.other(v).index;
    const auto& range = v.interval == Interval::I ? w.rows() : w.cols();
    if (!range.contains(lo) || !range.contains(hi)) return std::nullopt;
    return (v.interval == Interval::I ? p_at(w, lo, hi) : q_at(w, lo, hi)) - 1;
}

std::optional<BigInt> connecting_defect_formula(const TilingWindow& w, const ThetaSet& theta, const Vertex& v) {
    require_on_I_or_III(v);
    if (!in_margin(theta, v)) return std::nullopt;
    std::vector<Index> ends;
    for (const auto& a : theta.connecting)
        if (a.has(v)) ends.push_back(a.other(v).index);
    if (ends.empty()) return std::nullopt;
    std::sort(ends.begin(), ends.end());
    const Index lo = longest_arc(theta, v, Direction::Clockwise).arc.other(v).index;
    const Index hi = longest_arc(theta, v, Direction::Anticlockwise).arc.other(v).index;
    Cell first, second;
    if (v.interval == Interval::I) {
        first = {lo, ends.back()};
        second = {hi, ends.front()};
    } else {
        first = {ends.back(), lo};
        second = {ends.front(), hi};
    }
    if (!w.contains(first.first, first.second) || !w.contains(second.first, second.second)) return std::nullopt;
    return w.at(first.first, first.second) + w.at(second.first, second.second) - 2;
}

}  // namespace sl2
