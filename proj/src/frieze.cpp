#include "sl2/frieze.hpp"

#include "sl2/cc_counting.hpp"
#include "sl2/error.hpp"

namespace sl2 {

namespace {

std::string pos_name(Index a, Index d) { return "(" + std::to_string(a) + "," + std::to_string(d) + ")"; }

}  // namespace

const BigInt& FriezeWindow::at(Index a, Index d) const {
    auto it = entries.find({a, d});
    if (it == entries.end()) throw Error(ErrorCode::OutOfScope, "frieze entry " + pos_name(a, d) + " is not stored");
    return it->second;
}

std::vector<BigInt> FriezeWindow::quiddity() const {
    std::vector<BigInt> out;
    for (Index b = lo + 1; b < hi; ++b) out.push_back(has(b - 1, b + 1) ? at(b - 1, b + 1) : BigInt(0));
    return out;
}

FriezeWindow frieze_from_quiddity(const std::vector<BigInt>& quiddity, Index start, Index depth) {
    if (quiddity.empty()) throw Error(ErrorCode::InvalidInput, "empty quiddity sequence");
    if (depth < 1) throw Error(ErrorCode::InvalidInput, "depth must be positive");
    for (const auto& x : quiddity)
        if (x < 1) throw Error(ErrorCode::InvalidInput, "quiddity entries must be positive");
    const Index len = static_cast<Index>(quiddity.size());
    FriezeWindow f;
    f.kind = FriezeKind::Infinite;
    f.lo = start - 1;
    f.hi = start + len;
    f.depth = depth;
    auto quid = [&](Index b) -> const BigInt& { return quiddity[static_cast<std::size_t>(b - start)]; };
    for (Index a = f.lo; a <= f.hi; ++a) {
        f.set(a, a, 0);
        if (a + 1 > f.hi || depth < 1) continue;
        f.set(a, a + 1, 1);
        BigInt prev2 = 0, prev = 1;
        for (Index d = a + 2; d <= std::min(f.hi, a + depth); ++d) {
            BigInt cur = quid(d - 1) * prev - prev2;
            if (cur <= 0)
                throw Error(ErrorCode::NonPositiveEntry, "entry " + pos_name(a, d) + " is " + cur.str());
            f.set(a, d, cur);
            prev2 = std::move(prev);
            prev = std::move(cur);
        }
    }
    return f;
}

FriezeWindow cc_frieze_from_polygon(const DiscFragment& tri) {
    const Index m = static_cast<Index>(tri.boundary.size());
    if (m < 3) throw Error(ErrorCode::InvalidInput, "a polygon needs at least three vertices");
    const Interval j = tri.boundary.front().interval;
    const Index a = tri.boundary.front().index;
    for (Index k = 0; k < m; ++k) {
        const auto& v = tri.boundary[static_cast<std::size_t>(k)];
        if (v.interval != j || v.index != a + k)
            throw Error(ErrorCode::InvalidInput, "polygon vertices must be consecutive on one interval");
    }
    Counter counter(tri);
    std::vector<std::vector<BigInt>> rows;
    for (Index k = 0; k < m; ++k) rows.push_back(counter.labels_from(static_cast<std::size_t>(k)));

    FriezeWindow f;
    f.kind = FriezeKind::FiniteCC;
    f.period = m;
    f.depth = m;
    f.lo = a;
    f.hi = a + 2 * m - 1;
    auto mod = [m](Index x) { return static_cast<std::size_t>(((x % m) + m) % m); };
    for (Index x = f.lo; x <= f.hi; ++x)
        for (Index y = x; y <= std::min(f.hi, x + m); ++y) f.set(x, y, rows[mod(x - a)][mod(y - a)]);
    return f;
}

DiscFragment triangulation_from_cc_frieze(const FriezeWindow& fund, Index a, Index d) {
    if (d - a < 2) throw Error(ErrorCode::NotAFundamentalDomain, "a fundamental domain spans at least three vertices");
    for (Index b = a; b <= d; ++b)
        for (Index c = b; c <= d; ++c)
            if (!fund.has(b, c))
                throw Error(ErrorCode::NotAFundamentalDomain, "entry " + pos_name(b, c) + " is missing");
    if (fund.at(a, d) != 1) throw Error(ErrorCode::NotAFundamentalDomain, "corner entry is not 1");
    for (Index b = a; b <= d; ++b) {
        if (fund.at(b, b) != 0 || (b < d && fund.at(b, b + 1) != 1))
            throw Error(ErrorCode::NotAFundamentalDomain, "border rows are not 0 and 1 at " + std::to_string(b));
        for (Index c = b + 1; c <= d; ++c)
            if (fund.at(b, c) < 1)
                throw Error(ErrorCode::NotAFundamentalDomain, "entry " + pos_name(b, c) + " is not positive");
        for (Index c = b + 1; c < d; ++c) {
            BigInt det = fund.at(b, c) * fund.at(b + 1, c + 1) - fund.at(b, c + 1) * fund.at(b + 1, c);
            if (det != 1) throw Error(ErrorCode::NotAFundamentalDomain, "diamond rule fails at " + pos_name(b, c));
        }
    }
    DiscFragment frag;
    frag.shape = DiscShape::d2();
    for (Index b = a; b <= d; ++b) frag.boundary.push_back(vI(b));
    for (Index b = a; b <= d; ++b)
        for (Index c = b + 2; c <= d; ++c)
            if (fund.at(b, c) == 1 && !(b == a && c == d)) frag.diagonals.emplace_back(vI(b), vI(c));
    auto rep = validate_fragment(frag);
    if (!rep.ok() || !frag.fully_triangulated())
        throw Error(ErrorCode::NotAFundamentalDomain,
                    rep.ok() ? "the 1-entries do not triangulate the polygon" : rep.issues.front());
    return frag;
}

ValidationReport validate_frieze(const FriezeWindow& w) {
    ValidationReport rep;
    const bool finite = w.kind == FriezeKind::FiniteCC;
    for (const auto& [key, value] : w.entries) {
        const auto [a, d] = key;
        const Index gap = d - a;
        const std::string at = pos_name(a, d);
        if (gap < 0) {
            rep.issues.push_back("entry " + at + " lies below the diagonal");
        } else if (gap == 0) {
            if (value != 0) rep.issues.push_back("entry " + at + " should be 0");
        } else if (gap == 1) {
            if (value != 1) rep.issues.push_back("entry " + at + " should be 1");
        } else if (finite && gap == w.period) {
            if (value != 0) rep.issues.push_back("entry " + at + " should be 0 on the far border");
        } else if (finite && gap > w.period) {
            rep.issues.push_back("entry " + at + " lies beyond the band");
        } else if (finite && gap == w.period - 1) {
            if (value != 1) rep.issues.push_back("entry " + at + " should be 1 on the far border");
        } else if (value < 1) {
            rep.issues.push_back("entry " + at + " is not positive");
        }
    }
    for (const auto& [key, value] : w.entries) {
        const auto [a, d] = key;
        if (d < a + 1) continue;
        if (!w.has(a, d + 1) || !w.has(a + 1, d) || !w.has(a + 1, d + 1)) continue;
        BigInt det = value * w.at(a + 1, d + 1) - w.at(a, d + 1) * w.at(a + 1, d);
        if (det != 1) rep.issues.push_back("diamond rule fails at " + pos_name(a, d) + ": determinant " + det.str());
    }
    return rep;
}

}  // namespace sl2
