#include "sl2/reconstruct.hpp"

#include "sl2/cc_counting.hpp"
#include "sl2/error.hpp"
#include "sl2/theta_defects.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace sl2 {

std::string CaseId::name() const {
    std::string out = "Case" + std::to_string(static_cast<int>(kind) + 1);
    switch (variant) {
        case Variant::None: break;
        case Variant::FirstQuadrant: out += " (first quadrant)"; break;
        case Variant::ThirdQuadrant: out += " (third quadrant)"; break;
        case Variant::Row: out += " (row)"; break;
        case Variant::Column: out += " (column)"; break;
    }
    return out;
}

CaseId classify(const OnesCertificate& cert) {
    const auto& z = cert.zigzag;
    if (!is_zigzag_shaped(z.points))
        throw Error(ErrorCode::InconsistentCertificate, "certificate points do not form a zig-zag");
    using K = CaseId::Kind;
    using V = CaseId::Variant;
    if (!z.left_bounded && !z.right_bounded) return {K::Case1, V::None};
    if (!z.right_bounded) return {K::Case2, V::FirstQuadrant};
    if (!z.left_bounded) return {K::Case2, V::ThirdQuadrant};
    if (z.points.empty()) return {K::Case6, V::None};
    if (z.points.size() == 1) return {K::Case5, V::None};
    const bool one_row = std::all_of(z.points.begin(), z.points.end(),
                                     [&](const Cell& c) { return c.first == z.points.front().first; });
    const bool one_col = std::all_of(z.points.begin(), z.points.end(),
                                     [&](const Cell& c) { return c.second == z.points.front().second; });
    if (one_row) return {K::Case4, V::Row};
    if (one_col) return {K::Case4, V::Column};
    return {K::Case3, V::None};
}

DiscShape shape_for(const CaseId& id) {
    switch (id.kind) {
        case CaseId::Kind::Case1: return DiscShape::d2();
        case CaseId::Kind::Case2:
            return id.variant == CaseId::Variant::FirstQuadrant ? DiscShape::d3_with_II() : DiscShape::d3_with_IV();
        default: return DiscShape::d4();
    }
}

std::string to_string(Move m) {
    switch (m) {
        case Move::AddRow1ToRow2: return "AddRow1ToRow2";
        case Move::AddRow2ToRow1: return "AddRow2ToRow1";
        case Move::AddCol1ToCol2: return "AddCol1ToCol2";
        case Move::AddCol2ToCol1: return "AddCol2ToCol1";
    }
    return "?";
}

NonnegSL2Matrix matrix_for(const BigInt& r, const BigInt& m) {
    if (r <= 0 || r >= m) throw Error(ErrorCode::OutOfRange, "need 0 < r < m");
    if (boost::multiprecision::gcd(r, m) != 1) throw Error(ErrorCode::NotCoprime, "r and m are not coprime");
    const BigInt n = m - r;
    // s*r - p*n = 1 with 0 <= p < r: p = -n^{-1} mod r.
    BigInt p = 0;
    if (r > 1) {
        // Extended Euclid for n mod r.
        BigInt old_r = n % r, cur_r = r, old_x = 1, cur_x = 0;
        while (cur_r != 0) {
            BigInt q = old_r / cur_r;
            BigInt t = old_r - q * cur_r;
            old_r = cur_r;
            cur_r = t;
            t = old_x - q * cur_x;
            old_x = cur_x;
            cur_x = t;
        }
        BigInt inv = ((old_x % r) + r) % r;  // n * inv = 1 mod r
        p = (r - inv) % r;
    }
    const BigInt s = (1 + p * n) / r;
    NonnegSL2Matrix x{r - p, p, n - s, s};
    if (x.det() != 1 || x.k < 0) throw Error(ErrorCode::OutOfRange, "Bezout normalization failed");
    return x;
}

NonnegSL2Matrix replay(const std::vector<Move>& word) {
    NonnegSL2Matrix x;
    for (Move mv : word) {
        switch (mv) {
            case Move::AddRow1ToRow2: x.k += x.i; x.l += x.j; break;
            case Move::AddRow2ToRow1: x.i += x.k; x.j += x.l; break;
            case Move::AddCol1ToCol2: x.j += x.i; x.l += x.k; break;
            case Move::AddCol2ToCol1: x.i += x.j; x.k += x.l; break;
        }
    }
    return x;
}

std::vector<Move> matrix_word(const NonnegSL2Matrix& input) {
    if (input.i < 0 || input.j < 0 || input.k < 0 || input.l < 0 || input.det() != 1)
        throw Error(ErrorCode::InvalidInput, "matrix is not a nonnegative SL2 matrix");
    NonnegSL2Matrix x = input;
    const NonnegSL2Matrix id;
    std::vector<Move> word;
    while (!(x == id)) {
        if (x.i >= x.k && x.j >= x.l) {
            x.i -= x.k;
            x.j -= x.l;
            word.push_back(Move::AddRow2ToRow1);
        } else if (x.k >= x.i && x.l >= x.j) {
            x.k -= x.i;
            x.l -= x.j;
            word.push_back(Move::AddRow1ToRow2);
        } else if (x.i >= x.j && x.k >= x.l) {
            x.i -= x.j;
            x.k -= x.l;
            word.push_back(Move::AddCol2ToCol1);
        } else if (x.j >= x.i && x.l >= x.k) {
            x.j -= x.i;
            x.l -= x.k;
            word.push_back(Move::AddCol1ToCol2);
        } else {
            throw Error(ErrorCode::InvalidInput, "matrix does not reduce");
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

namespace {

std::vector<Arc> sides_of(const std::vector<Vertex>& boundary) {
    DiscFragment f;
    f.boundary = boundary;
    return f.sides();
}

std::vector<Arc> drop_sides(const std::set<Arc>& arcs, const std::vector<Vertex>& boundary) {
    const auto sides = sides_of(boundary);
    const std::set<Arc> side_set(sides.begin(), sides.end());
    std::vector<Arc> out;
    for (const auto& a : arcs)
        if (!side_set.count(a)) out.push_back(a);
    return out;
}

}  // namespace

EarPolygon ear_glued_polygon(const BigInt& r, const BigInt& m) {
    const auto word = matrix_word(matrix_for(r, m));
    std::deque<int> two{0}, four{1};
    int next = 2;
    std::vector<std::pair<int, int>> arcs;
    for (Move mv : word) {
        const int id = next++;
        switch (mv) {
            case Move::AddRow1ToRow2:
                arcs.emplace_back(four.back(), two.front());
                two.push_front(id);
                break;
            case Move::AddRow2ToRow1:
                arcs.emplace_back(four.back(), two.front());
                four.push_back(id);
                break;
            case Move::AddCol1ToCol2:
                arcs.emplace_back(two.back(), four.front());
                four.push_front(id);
                break;
            case Move::AddCol2ToCol1:
                arcs.emplace_back(two.back(), four.front());
                two.push_back(id);
                break;
        }
    }
    std::map<int, Vertex> where;
    for (std::size_t i = 0; i < two.size(); ++i) where[two[i]] = vII(static_cast<Index>(i));
    const Index top = static_cast<Index>(four.size()) - 1;
    for (std::size_t j = 0; j < four.size(); ++j) where[four[j]] = vIV(static_cast<Index>(j) - top);

    EarPolygon out;
    out.polygon.shape = DiscShape::d4();
    for (int id : two) out.polygon.boundary.push_back(where[id]);
    for (int id : four) out.polygon.boundary.push_back(where[id]);
    std::set<Arc> all;
    for (const auto& [x, y] : arcs) all.emplace(where[x], where[y]);
    out.polygon.diagonals = drop_sides(all, out.polygon.boundary);
    out.chi = where[four.back()];
    out.beta = where[two.front()];
    out.gamma = where[two.back()];
    out.phi = where[four.front()];
    return out;
}

namespace {

struct Divided {
    BigInt quotient, remainder;
};

Divided divide(const BigInt& x, const BigInt& m) { return {x / m, x % m}; }

// Aux vertices are addressed by side (II or IV) and an integer position.
struct AuxEnd {
    bool on_ii = true;
    Index pos = 0;
};

struct Layout {
    std::vector<std::pair<Vertex, AuxEnd>> spokes;
    std::vector<std::pair<AuxEnd, AuxEnd>> links;
    std::set<Index> ii, iv;

    void spoke(const Vertex& x, bool on_ii, Index pos) {
        spokes.push_back({x, {on_ii, pos}});
        (on_ii ? ii : iv).insert(pos);
    }
    void link(AuxEnd x, AuxEnd y) {
        links.push_back({x, y});
        (x.on_ii ? ii : iv).insert(x.pos);
        (y.on_ii ? ii : iv).insert(y.pos);
    }
};

class Engine {
public:
    Engine(const TilingWindow& w, const ThetaSet& theta, const DiscShape& shape)
        : w_(w), theta_(theta), shape_(shape) {}

    std::vector<Vertex> chain(const Vertex& start, Direction dir, Index end) const {
        std::vector<Vertex> out{start};
        while (out.back().index != end) out.push_back(longest_arc(theta_, out.back(), dir).arc.other(out.back()));
        return out;
    }

    BigInt def(const Vertex& x) const { return raw_defect(w_, theta_, x); }

    const BigInt& t(const Vertex& b, const Vertex& v) const { return w_.at(b.index, v.index); }

    // Blocks of spokes from consecutive chain vertices; consecutive blocks share one position.
    Index lay(Layout& out, const std::vector<Vertex>& ch, const std::vector<BigInt>& sizes, bool on_ii, Index start,
              Index step) const {
        Index pos = start;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            if (sizes[i] < 1)
                throw Error(ErrorCode::AgreementFailure, "block at " + to_string(ch[i]) + " would be empty");
            const Index n = to_int64(sizes[i]);
            for (Index k = 0; k < n; ++k) out.spoke(ch[i], on_ii, pos + step * k);
            pos += step * (n - 1);
        }
        return pos;
    }

    std::vector<BigInt> chain_sizes(const std::vector<Vertex>& ch, std::optional<BigInt> first) const {
        std::vector<BigInt> out;
        if (ch.size() < 2) return out;
        out.push_back(first ? *first : BigInt(0));
        for (std::size_t i = 1; i + 1 < ch.size(); ++i) out.push_back(def(ch[i]));
        return out;
    }

    DiscFragment assemble(const Layout& lay) const {
        const auto& r = w_.rows();
        const auto& c = w_.cols();
        const Index ii_low = lay.ii.empty() ? 0 : *lay.ii.begin();
        const Index iv_low = lay.iv.empty() ? 0 : *lay.iv.begin();
        auto place = [&](const AuxEnd& e) -> Vertex {
            if (e.on_ii) return shape_.has(Interval::II) ? vII(e.pos) : vI(r.hi + 1 + e.pos - ii_low);
            return shape_.has(Interval::IV) ? vIV(e.pos) : vIII(c.hi + 1 + e.pos - iv_low);
        };
        DiscFragment f;
        f.shape = shape_;
        for (Index b = r.lo; b <= r.hi; ++b) f.boundary.push_back(vI(b));
        for (Index p : lay.ii) f.boundary.push_back(place({true, p}));
        for (Index v = c.lo; v <= c.hi; ++v) f.boundary.push_back(vIII(v));
        for (Index p : lay.iv) f.boundary.push_back(place({false, p}));
        std::sort(f.boundary.begin(), f.boundary.end());

        std::set<Arc> arcs = theta_.all();
        for (const auto& [x, e] : lay.spokes) arcs.emplace(x, place(e));
        for (const auto& [x, y] : lay.links)
            if (place(x) != place(y)) arcs.emplace(place(x), place(y));
        if (!lay.ii.empty()) {
            arcs.emplace(vI(r.hi), place({true, *lay.ii.begin()}));
            arcs.emplace(vIII(c.lo), place({true, *lay.ii.rbegin()}));
        }
        if (!lay.iv.empty()) {
            arcs.emplace(vIII(c.hi), place({false, *lay.iv.begin()}));
            arcs.emplace(vI(r.lo), place({false, *lay.iv.rbegin()}));
        }
        f.diagonals = drop_sides(arcs, f.boundary);
        return f;
    }

    const TilingWindow& w_;
    const ThetaSet& theta_;
    DiscShape shape_;
};

void ones_layout(const Engine& e, const ZigZag& ones, Layout& lay) {
    const auto& r = e.w_.rows();
    const auto& c = e.w_.cols();
    const auto [bs, vs] = ones.points.front();
    const auto [bn, vn] = ones.points.back();

    const auto cs = e.chain(vI(bs), Direction::Anticlockwise, r.hi);
    const auto ds = e.chain(vIII(vs), Direction::Clockwise, c.lo);
    std::optional<BigInt> c0, d0;
    if (cs.size() > 1) c0 = e.t(cs[1], ds[0]) - 1;
    if (ds.size() > 1) d0 = e.t(cs[0], ds[1]) - 1;
    e.lay(lay, cs, e.chain_sizes(cs, c0), true, 0, -1);
    e.lay(lay, ds, e.chain_sizes(ds, d0), true, 0, 1);

    const auto es = e.chain(vIII(vn), Direction::Anticlockwise, c.hi);
    const auto fs = e.chain(vI(bn), Direction::Clockwise, r.lo);
    std::optional<BigInt> e0, f0;
    if (es.size() > 1) e0 = e.t(fs[0], es[1]) - 1;
    if (fs.size() > 1) f0 = e.t(fs[1], es[0]) - 1;
    e.lay(lay, es, e.chain_sizes(es, e0), false, 0, -1);
    e.lay(lay, fs, e.chain_sizes(fs, f0), false, 0, 1);
}

struct Case6Parts {
    DwrParams dwr;
    EarPolygon ear;
};

Case6Parts no_ones_layout(const Engine& e, Layout& lay) {
    const auto& r = e.w_.rows();
    const auto& c = e.w_.cols();
    const auto mr = unique_min(e.w_);
    if (!mr.unique()) throw Error(ErrorCode::AgreementFailure, "the window minimum is not unique");
    const auto [b, v] = mr.positions.front();
    const BigInt& M = mr.value;
    const Vertex B = vI(b), V = vIII(v);

    BigInt ell_ii, ell_iv, rr, m_ii, m_iv, ss;
    DwrParams dwr;
    dwr.b = b;
    dwr.v = v;
    dwr.min_value = M;
    dwr.a = b > r.lo ? longest_arc(e.theta_, B, Direction::Clockwise).arc.other(B).index : b - 1;
    dwr.c = b < r.hi ? longest_arc(e.theta_, B, Direction::Anticlockwise).arc.other(B).index : b + 1;
    dwr.w = v < c.hi ? longest_arc(e.theta_, V, Direction::Anticlockwise).arc.other(V).index : v + 1;
    const Index d1 = v > c.lo ? longest_arc(e.theta_, V, Direction::Clockwise).arc.other(V).index : v - 1;

    if (b == r.lo) {
        const auto q = divide(e.t(vI(dwr.c), V), M);
        ell_ii = q.quotient;
        rr = M - q.remainder;
        ell_iv = 1;
    } else {
        const auto q = divide(e.t(vI(dwr.a), V), M);
        ell_iv = q.quotient;
        rr = q.remainder;
        ell_ii = b == r.hi ? BigInt(1) : e.def(B) - ell_iv;
    }
    if (v == c.hi) {
        const auto q = divide(e.t(B, vIII(d1)), M);
        m_ii = q.quotient;
        ss = M - q.remainder;
        m_iv = 1;
    } else {
        const auto q = divide(e.t(B, vIII(dwr.w)), M);
        m_iv = q.quotient;
        ss = q.remainder;
        m_ii = v == c.lo ? BigInt(1) : e.def(V) - m_iv;
    }
    dwr.ell = ell_iv;
    dwr.m = m_iv;
    dwr.r = rr;
    dwr.s = ss;
    if ((rr * ss) % M != 1 % M)
        throw Error(ErrorCode::AgreementFailure, "remainders are not inverse modulo the minimum");
    for (const auto* x : {&ell_ii, &ell_iv, &m_ii, &m_iv})
        if (*x < 1) throw Error(ErrorCode::AgreementFailure, "fan count is not positive");

    auto ear = ear_glued_polygon(rr, M);
    const Index n_ii = ear.gamma.index + 1;
    const Index phi_pos = ear.phi.index;

    const auto cs = e.chain(B, Direction::Anticlockwise, r.hi);
    const auto fs = e.chain(B, Direction::Clockwise, r.lo);
    const auto ds = e.chain(V, Direction::Clockwise, c.lo);
    const auto es = e.chain(V, Direction::Anticlockwise, c.hi);
    auto sizes = [&](const std::vector<Vertex>& ch, const BigInt& first) {
        std::vector<BigInt> out{first};
        for (std::size_t i = 1; i + 1 < ch.size(); ++i) out.push_back(e.def(ch[i]));
        return out;
    };
    e.lay(lay, cs, sizes(cs, ell_ii), true, 0, -1);
    e.lay(lay, ds, sizes(ds, m_ii), true, n_ii - 1, 1);
    e.lay(lay, fs, sizes(fs, ell_iv), false, 0, 1);
    e.lay(lay, es, sizes(es, m_iv), false, phi_pos, -1);

    lay.link({false, 0}, {true, 0});
    lay.link({true, n_ii - 1}, {false, phi_pos});
    for (Index p = 0; p < n_ii; ++p) lay.ii.insert(p);
    for (Index p = phi_pos; p <= 0; ++p) lay.iv.insert(p);
    for (const auto& a : ear.polygon.diagonals)
        lay.link({a.lo().interval == Interval::II, a.lo().index}, {a.hi().interval == Interval::II, a.hi().index});
    return {dwr, ear};
}

}  // namespace

ConstructTrace construct_traced(const TilingWindow& w, const OnesCertificate& cert) {
    if (w.rows().size() < 2 || w.cols().size() < 2)
        throw Error(ErrorCode::WindowTooSmall, "construction needs a window of at least 2x2");
    const auto report = validate_window(w);
    if (!report.ok()) throw Error(ErrorCode::InvalidInput, report.issues.front());
    ConstructTrace trace;
    trace.id = classify(cert);
    build_theta(w, cert);
    const ZigZag ones = ones_zigzag(w);
    std::vector<Cell> visible;
    for (const auto& p : cert.zigzag.points)
        if (w.contains(p.first, p.second)) visible.push_back(p);
    if (visible != ones.points)
        throw Error(ErrorCode::InconsistentCertificate, "certificate points disagree with the window's 1-entries");

    const ThetaSet theta = window_theta(w);
    Engine engine(w, theta, shape_for(trace.id));
    Layout lay;
    if (!ones.points.empty()) {
        ones_layout(engine, ones, lay);
    } else {
        auto parts = no_ones_layout(engine, lay);
        trace.dwr = parts.dwr;
        trace.chi = parts.ear.chi;
        trace.beta = parts.ear.beta;
        trace.gamma = parts.ear.gamma;
        trace.phi = parts.ear.phi;
    }
    trace.fragment = engine.assemble(lay);
    if (trace.chi) {
        // Re-express the ear landmarks in fragment vertices.
        auto find = [&](const Vertex& x) {
            const Index ii_low = lay.ii.empty() ? 0 : *lay.ii.begin();
            const Index iv_low = lay.iv.empty() ? 0 : *lay.iv.begin();
            if (x.interval == Interval::II)
                return engine.shape_.has(Interval::II) ? x : vI(w.rows().hi + 1 + x.index - ii_low);
            return engine.shape_.has(Interval::IV) ? x : vIII(w.cols().hi + 1 + x.index - iv_low);
        };
        trace.chi = find(*trace.chi);
        trace.beta = find(*trace.beta);
        trace.gamma = find(*trace.gamma);
        trace.phi = find(*trace.phi);
    }
    const auto agreement = verify_agreement(trace.fragment, w);
    if (!agreement.ok()) {
        std::string why = agreement.issues.empty() ? "constructed fragment does not reproduce the window"
                                                   : agreement.issues.back();
        throw Error(ErrorCode::AgreementFailure, why);
    }
    return trace;
}

DiscFragment construct(const TilingWindow& w, const OnesCertificate& cert) {
    return construct_traced(w, cert).fragment;
}

DwrParams dwr_parameters(const TilingWindow& w, const OnesCertificate& cert) {
    if (!cert.zigzag.points.empty() || !cert.zigzag.left_bounded || !cert.zigzag.right_bounded)
        throw Error(ErrorCode::InconsistentCertificate, "certificate does not describe a tiling without 1-entries");
    const ThetaSet theta = build_theta(w, cert);
    const auto mr = unique_min(w);
    if (!mr.unique()) throw Error(ErrorCode::InvalidInput, "the window minimum is not unique");
    const auto [b, v] = mr.positions.front();
    if (b <= w.rows().lo || b >= w.rows().hi || v <= w.cols().lo || v >= w.cols().hi)
        throw Error(ErrorCode::InsufficientMargin, "the minimum lies on the window edge");
    DwrParams out;
    out.b = b;
    out.v = v;
    out.min_value = mr.value;
    out.a = longest_arc(theta, vI(b), Direction::Clockwise).arc.other(vI(b)).index;
    out.c = longest_arc(theta, vI(b), Direction::Anticlockwise).arc.other(vI(b)).index;
    out.w = longest_arc(theta, vIII(v), Direction::Anticlockwise).arc.other(vIII(v)).index;
    if (!w.rows().contains(out.a) || !w.rows().contains(out.c) || !w.cols().contains(out.w))
        throw Error(ErrorCode::InsufficientMargin, "landmarks leave the window");
    const auto x = divide(w.at(out.a, v), mr.value);
    const auto y = divide(w.at(b, out.w), mr.value);
    out.ell = x.quotient;
    out.r = x.remainder;
    out.m = y.quotient;
    out.s = y.remainder;
    return out;
}

AgreementReport verify_agreement(const DiscFragment& frag, const TilingWindow& w) {
    AgreementReport rep;
    const auto structure = validate_fragment(frag);
    if (!structure.ok()) {
        rep.issues = structure.issues;
        return rep;
    }
    if (!frag.fully_triangulated()) {
        rep.issues.push_back("fragment is not fully triangulated");
        return rep;
    }
    const auto& r = w.rows();
    const auto& c = w.cols();
    for (Index b = r.lo; b <= r.hi; ++b)
        if (!frag.contains(vI(b))) rep.issues.push_back(to_string(vI(b)) + " is not on the fragment boundary");
    for (Index v = c.lo; v <= c.hi; ++v)
        if (!frag.contains(vIII(v))) rep.issues.push_back(to_string(vIII(v)) + " is not on the fragment boundary");
    if (!rep.issues.empty()) return rep;
    rep.structural = true;

    Counter counter(frag);
    const TilingWindow phi = phi_tiling(counter, r, c);

    rep.quiddity_I = true;
    if (c.size() >= 2)
        for (Index b = r.lo + 1; b < r.hi; ++b) {
            const auto lab = counter.labels_from(counter.require_position(vI(b - 1)));
            if (lab[counter.require_position(vI(b + 1))] != p_from_columns(w, b - 1, b + 1, c.lo)) {
                rep.quiddity_I = false;
                rep.issues.push_back("quiddity differs at " + to_string(vI(b)));
            }
        }
    rep.quiddity_III = true;
    if (r.size() >= 2)
        for (Index v = c.lo + 1; v < c.hi; ++v) {
            const auto lab = counter.labels_from(counter.require_position(vIII(v - 1)));
            if (lab[counter.require_position(vIII(v + 1))] != q_from_rows(w, v - 1, v + 1, r.lo)) {
                rep.quiddity_III = false;
                rep.issues.push_back("quiddity differs at " + to_string(vIII(v)));
            }
        }

    std::map<Index, int> row_hits, col_hits;
    for (Index b = r.lo; b <= r.hi; ++b)
        for (Index v = c.lo; v <= c.hi; ++v)
            if (phi.at(b, v) == w.at(b, v)) {
                ++row_hits[b];
                ++col_hits[v];
            } else if (!rep.first_mismatch) {
                rep.first_mismatch = Cell{b, v};
            }
    for (Index b = r.lo; b <= r.hi && !rep.corner; ++b)
        for (Index v = c.lo; v <= c.hi && !rep.corner; ++v)
            rep.corner = phi.at(b, v) == w.at(b, v) && row_hits[b] >= 2 && col_hits[v] >= 2;
    rep.full = !rep.first_mismatch;
    if (rep.first_mismatch) {
        const auto [b, v] = *rep.first_mismatch;
        rep.issues.push_back("entry (" + std::to_string(b) + "," + std::to_string(v) + ") is " + phi.at(b, v).str() +
                             ", expected " + w.at(b, v).str());
    }
    return rep;
}

}  // namespace sl2
