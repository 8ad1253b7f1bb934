#include "sl2/disc_model.hpp"

#include "sl2/error.hpp"

#include <algorithm>
#include <map>

namespace sl2 {

std::string to_string(Interval j) {
    switch (j) {
        case Interval::I: return "I";
        case Interval::II: return "II";
        case Interval::III: return "III";
        case Interval::IV: return "IV";
    }
    return "?";
}

Interval interval_from_string(const std::string& s) {
    if (s == "I") return Interval::I;
    if (s == "II") return Interval::II;
    if (s == "III") return Interval::III;
    if (s == "IV") return Interval::IV;
    throw Error(ErrorCode::IllegalInterval, "unknown interval tag '" + s + "'");
}

std::string to_string(const Vertex& v) { return std::to_string(v.index) + "^" + to_string(v.interval); }

Arc::Arc(Vertex x, Vertex y) : lo_(std::min(x, y)), hi_(std::max(x, y)) {
    if (x == y) throw Error(ErrorCode::InvalidInput, "arc endpoints coincide at " + to_string(x));
}

std::string to_string(const Arc& a) { return "{" + to_string(a.lo()) + "," + to_string(a.hi()) + "}"; }

DiscShape DiscShape::d2() { return {2, {Interval::I, Interval::III}}; }
DiscShape DiscShape::d3_with_II() { return {3, {Interval::I, Interval::II, Interval::III}}; }
DiscShape DiscShape::d3_with_IV() { return {3, {Interval::I, Interval::III, Interval::IV}}; }
DiscShape DiscShape::d4() { return {4, {Interval::I, Interval::II, Interval::III, Interval::IV}}; }

bool DiscShape::has(Interval j) const { return std::find(intervals.begin(), intervals.end(), j) != intervals.end(); }

std::string DiscShape::name() const {
    std::string s = "D" + std::to_string(n) + "[";
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (i) s += ",";
        s += to_string(intervals[i]);
    }
    return s + "]";
}

void require_legal(const DiscShape& shape, const Vertex& v) {
    if (!shape.has(v.interval))
        throw Error(ErrorCode::IllegalInterval, "vertex " + to_string(v) + " is not on " + shape.name());
}

bool in_cyclic_order(const DiscShape& shape, const std::vector<Vertex>& vs) {
    for (const auto& v : vs) require_legal(shape, v);
    const std::size_t n = vs.size();
    if (n < 2) return true;
    std::size_t descents = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = vs[i];
        const auto& b = vs[(i + 1) % n];
        if (a == b) return false;
        if (b < a) ++descents;
    }
    return descents == 1;
}

bool chords_cross(const Arc& x, const Arc& y) {
    if (x.has(y.lo()) || x.has(y.hi())) return false;
    auto inside = [&](const Vertex& p) { return x.lo() < p && p < x.hi(); };
    return inside(y.lo()) != inside(y.hi());
}

bool arcs_cross(const DiscShape& shape, const Arc& x, const Arc& y) {
    for (const auto& v : {x.lo(), x.hi(), y.lo(), y.hi()}) require_legal(shape, v);
    return chords_cross(x, y);
}

std::pair<Vertex, Vertex> vertex_neighbors(const Vertex& v) {
    return {{v.interval, v.index - 1}, {v.interval, v.index + 1}};
}

bool are_neighbors(const Vertex& x, const Vertex& y) {
    return x.interval == y.interval && (x.index - y.index == 1 || y.index - x.index == 1);
}

std::vector<Arc> DiscFragment::sides() const {
    std::vector<Arc> out;
    const std::size_t m = boundary.size();
    if (m < 2) return out;
    if (m == 2) {
        out.emplace_back(boundary[0], boundary[1]);
        return out;
    }
    for (std::size_t i = 0; i < m; ++i) out.emplace_back(boundary[i], boundary[(i + 1) % m]);
    return out;
}

std::vector<Arc> DiscFragment::closing_sides() const {
    std::vector<Arc> out;
    for (const auto& s : sides())
        if (!are_neighbors(s.lo(), s.hi())) out.push_back(s);
    return out;
}

bool DiscFragment::fully_triangulated() const {
    const std::size_t m = boundary.size();
    if (m < 2) return false;
    if (m == 2) return diagonals.empty();
    return diagonals.size() == m - 3;
}

std::optional<std::size_t> DiscFragment::position(const Vertex& v) const {
    for (std::size_t i = 0; i < boundary.size(); ++i)
        if (boundary[i] == v) return i;
    return std::nullopt;
}

DiscFragment canonical(DiscFragment f) {
    std::sort(f.boundary.begin(), f.boundary.end());
    std::sort(f.diagonals.begin(), f.diagonals.end());
    return f;
}

ValidationReport validate_fragment(const DiscFragment& frag, const std::set<Arc>& ambient_arcs) {
    ValidationReport rep;
    auto& out = rep.issues;
    const auto& bd = frag.boundary;
    const std::size_t m = bd.size();
    if (m < 2) {
        out.push_back("boundary has fewer than two vertices");
        return rep;
    }
    bool legal = true;
    for (const auto& v : bd) {
        if (!frag.shape.has(v.interval)) {
            out.push_back("vertex " + to_string(v) + " is not on " + frag.shape.name());
            legal = false;
        }
    }
    std::set<Vertex> seen(bd.begin(), bd.end());
    if (seen.size() != m) {
        out.push_back("boundary repeats a vertex");
        return rep;
    }
    if (legal && !in_cyclic_order(frag.shape, bd)) out.push_back("boundary is not in cyclic order");

    const auto sides = frag.sides();
    std::set<Arc> side_set(sides.begin(), sides.end());
    for (const auto& s : sides) {
        if (!are_neighbors(s.lo(), s.hi()) && !ambient_arcs.count(s))
            out.push_back("side " + to_string(s) + " is neither an edge nor an ambient arc");
    }

    std::set<Arc> diag_set;
    for (const auto& d : frag.diagonals) {
        if (!seen.count(d.lo()) || !seen.count(d.hi()))
            out.push_back("diagonal " + to_string(d) + " has an endpoint off the boundary");
        if (side_set.count(d)) out.push_back("diagonal " + to_string(d) + " is a boundary side");
        if (!diag_set.insert(d).second) out.push_back("diagonal " + to_string(d) + " is repeated");
    }
    for (std::size_t i = 0; i < frag.diagonals.size(); ++i)
        for (std::size_t j = i + 1; j < frag.diagonals.size(); ++j)
            if (chords_cross(frag.diagonals[i], frag.diagonals[j]))
                out.push_back("diagonals " + to_string(frag.diagonals[i]) + " and " +
                              to_string(frag.diagonals[j]) + " cross");
    if (!frag.fully_triangulated())
        out.push_back("not fully triangulated: " + std::to_string(frag.diagonals.size()) + " diagonals for " +
                      std::to_string(m) + " vertices");
    return rep;
}

ValidationReport validate_fragment(const DiscFragment& frag) {
    std::set<Arc> ambient;
    if (frag.boundary.size() >= 2) {
        std::set<Vertex> distinct(frag.boundary.begin(), frag.boundary.end());
        if (distinct.size() == frag.boundary.size())
            for (const auto& s : frag.closing_sides()) ambient.insert(s);
    }
    return validate_fragment(frag, ambient);
}

namespace {

struct Hop {
    Vertex leave;
    Vertex enter;
};

// Greedy route from interval `from` (leaving at index >= min_leave) to `target`
// (entering at index <= max_enter) through the intervals listed in `via`.
bool route(const std::set<Arc>& arcs, Interval from, Index min_leave, const std::vector<Interval>& via,
           Interval target, Index max_enter, std::vector<Hop>& hops) {
    auto best_hop = [&](Interval to, bool bounded_enter) -> std::optional<Hop> {
        std::optional<Hop> best;
        for (const auto& a : arcs) {
            for (int flip = 0; flip < 2; ++flip) {
                const Vertex x = flip ? a.hi() : a.lo();
                const Vertex y = flip ? a.lo() : a.hi();
                if (x.interval != from || y.interval != to) continue;
                if (x.index < min_leave) continue;
                if (bounded_enter && y.index > max_enter) continue;
                if (from == to && y.index >= x.index) continue;
                if (!best || x.index > best->leave.index ||
                    (x.index == best->leave.index && y.index < best->enter.index))
                    best = Hop{x, y};
            }
        }
        return best;
    };

    if (auto h = best_hop(target, true)) {
        hops.push_back(*h);
        return true;
    }
    for (std::size_t i = 0; i < via.size(); ++i) {
        auto h = best_hop(via[i], false);
        if (!h) continue;
        std::vector<Interval> rest(via.begin() + static_cast<std::ptrdiff_t>(i) + 1, via.end());
        std::vector<Hop> tail;
        if (route(arcs, via[i], h->enter.index, rest, target, max_enter, tail)) {
            hops.push_back(*h);
            hops.insert(hops.end(), tail.begin(), tail.end());
            return true;
        }
    }
    return false;
}

}  // namespace

DiscFragment close_window(const DiscShape& shape, const std::set<Arc>& ambient_arcs,
                          const std::set<Vertex>& required) {
    if (required.empty()) throw Error(ErrorCode::InvalidInput, "no required vertices");
    for (const auto& v : required) require_legal(shape, v);
    for (const auto& a : ambient_arcs) {
        require_legal(shape, a.lo());
        require_legal(shape, a.hi());
    }

    std::map<Interval, std::pair<Index, Index>> span;
    for (const auto& v : required) {
        auto it = span.find(v.interval);
        if (it == span.end())
            span[v.interval] = {v.index, v.index};
        else {
            it->second.first = std::min(it->second.first, v.index);
            it->second.second = std::max(it->second.second, v.index);
        }
    }
    std::vector<Interval> occupied;
    for (auto j : shape.intervals)
        if (span.count(j)) occupied.push_back(j);

    const std::size_t n = shape.intervals.size();
    auto pos_of = [&](Interval j) {
        return static_cast<std::size_t>(std::find(shape.intervals.begin(), shape.intervals.end(), j) -
                                        shape.intervals.begin());
    };

    // For each interval: where the boundary enters and leaves it.
    std::map<Interval, Index> enter_at, leave_at;
    std::set<Vertex> chosen;
    const std::size_t k = occupied.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Interval from = occupied[i];
        const Interval to = occupied[(i + 1) % k];
        std::vector<Interval> via;
        for (std::size_t s = (pos_of(from) + 1) % n; shape.intervals[s] != to; s = (s + 1) % n)
            via.push_back(shape.intervals[s]);
        std::vector<Hop> hops;
        if (!route(ambient_arcs, from, span[from].second, via, to, span[to].first, hops))
            throw Error(ErrorCode::NoClosingArc, "no ambient arc links " + to_string(from) + " to " + to_string(to));
        leave_at[from] = hops.front().leave.index;
        for (std::size_t h = 0; h + 1 < hops.size(); ++h) {
            const Interval mid = hops[h].enter.interval;
            for (Index x = hops[h].enter.index; x <= hops[h + 1].leave.index; ++x) chosen.insert({mid, x});
        }
        enter_at[to] = hops.back().enter.index;
    }
    for (auto j : occupied)
        for (Index x = enter_at[j]; x <= leave_at[j]; ++x) chosen.insert({j, x});

    DiscFragment frag;
    frag.shape = shape;
    frag.boundary.assign(chosen.begin(), chosen.end());
    const auto sides = frag.sides();
    std::set<Arc> side_set(sides.begin(), sides.end());
    for (const auto& a : ambient_arcs)
        if (chosen.count(a.lo()) && chosen.count(a.hi()) && !side_set.count(a)) frag.diagonals.push_back(a);
    return frag;
}

}  // namespace sl2
