#include "sl2/cc_counting.hpp"

#include "sl2/error.hpp"

#include <algorithm>
#include <deque>
#include <optional>

namespace sl2 {

const BigInt& LabelMap::at(const Vertex& v) const {
    auto it = labels.find(v);
    if (it == labels.end()) throw Error(ErrorCode::VertexNotInFragment, to_string(v) + " is not labelled");
    return it->second;
}

Counter::Counter(const DiscFragment& frag) : frag_(frag) {
    auto rep = validate_fragment(frag_);
    if (!rep.ok()) throw Error(ErrorCode::NotFullyTriangulated, rep.issues.front());
    const std::size_t m = frag_.boundary.size();
    for (std::size_t i = 0; i < m; ++i) pos_[frag_.boundary[i]] = i;
    adjacent_.assign(m, {});
    auto link = [&](std::size_t i, std::size_t j) {
        adjacent_[i].push_back(j);
        adjacent_[j].push_back(i);
    };
    if (m == 2) {
        link(0, 1);
    } else {
        for (std::size_t i = 0; i < m; ++i) link(i, (i + 1) % m);
    }
    for (const auto& d : frag_.diagonals) link(pos_.at(d.lo()), pos_.at(d.hi()));
    for (auto& a : adjacent_) std::sort(a.begin(), a.end());

    triangles_at_.assign(m, {});
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j : adjacent_[i]) {
            if (j <= i) continue;
            for (std::size_t k : adjacent_[j]) {
                if (k <= j) continue;
                if (!std::binary_search(adjacent_[i].begin(), adjacent_[i].end(), k)) continue;
                const std::size_t id = triangles_.size();
                triangles_.push_back({i, j, k});
                triangles_at_[i].push_back(id);
                triangles_at_[j].push_back(id);
                triangles_at_[k].push_back(id);
            }
        }
    }
    if (m >= 3 && triangles_.size() != m - 2)
        throw Error(ErrorCode::NotFullyTriangulated, "triangle count does not match the polygon size");
}

std::size_t Counter::require_position(const Vertex& v) const {
    auto it = pos_.find(v);
    if (it == pos_.end()) throw Error(ErrorCode::VertexNotInFragment, to_string(v) + " is not on the fragment boundary");
    return it->second;
}

std::vector<BigInt> Counter::labels_from(std::size_t base) const {
    const std::size_t m = frag_.boundary.size();
    std::vector<std::optional<BigInt>> lab(m);
    std::deque<std::size_t> fresh;
    lab[base] = BigInt(0);
    fresh.push_back(base);
    for (std::size_t j : adjacent_[base]) {
        lab[j] = BigInt(1);
        fresh.push_back(j);
    }
    while (!fresh.empty()) {
        const std::size_t x = fresh.front();
        fresh.pop_front();
        for (std::size_t id : triangles_at_[x]) {
            const auto& t = triangles_[id];
            int known = 0;
            std::size_t missing = 0;
            for (std::size_t c : t) {
                if (lab[c])
                    ++known;
                else
                    missing = c;
            }
            if (known != 2) continue;
            BigInt sum = 0;
            for (std::size_t c : t)
                if (lab[c]) sum += *lab[c];
            lab[missing] = sum;
            fresh.push_back(missing);
        }
    }
    std::vector<BigInt> out(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!lab[i]) throw Error(ErrorCode::NotFullyTriangulated, "counting did not reach every vertex");
        out[i] = *lab[i];
    }
    return out;
}

LabelMap cc_labels(const DiscFragment& frag, const Vertex& base) {
    Counter c(frag);
    const auto values = c.labels_from(c.require_position(base));
    LabelMap out{base, {}};
    for (std::size_t i = 0; i < values.size(); ++i) out.labels[frag.boundary[i]] = values[i];
    return out;
}

BigInt cc_value(const DiscFragment& frag, const Vertex& mu, const Vertex& nu) {
    Counter c(frag);
    const std::size_t j = c.require_position(nu);
    return c.labels_from(c.require_position(mu))[j];
}

TilingWindow phi_tiling(const Counter& counter, IndexRange rows, IndexRange cols) {
    TilingWindow t(rows, cols);
    std::vector<std::size_t> col_pos;
    for (Index v = cols.lo; v <= cols.hi; ++v) col_pos.push_back(counter.require_position(vIII(v)));
    for (Index b = rows.lo; b <= rows.hi; ++b) {
        const auto lab = counter.labels_from(counter.require_position(vI(b)));
        for (Index v = cols.lo; v <= cols.hi; ++v) t.at(b, v) = lab[col_pos[static_cast<std::size_t>(v - cols.lo)]];
    }
    return t;
}

namespace {

FriezeWindow interval_frieze(const Counter& counter, Interval j, IndexRange r) {
    FriezeWindow f;
    f.kind = FriezeKind::Infinite;
    f.lo = r.lo;
    f.hi = r.hi;
    f.depth = r.hi - r.lo;
    for (Index a = r.lo; a <= r.hi; ++a) {
        const auto lab = counter.labels_from(counter.require_position({j, a}));
        for (Index d = a; d <= r.hi; ++d) f.set(a, d, lab[counter.require_position({j, d})]);
    }
    return f;
}

}  // namespace

PhiWindow phi_window(const DiscFragment& frag, IndexRange rows, IndexRange cols) {
    Counter c(frag);
    PhiWindow out;
    out.t = phi_tiling(c, rows, cols);
    out.p = interval_frieze(c, Interval::I, rows);
    out.q = interval_frieze(c, Interval::III, cols);
    return out;
}

bool ptolemy_check(const DiscFragment& frag, const Arc& x, const Arc& y) {
    if (!chords_cross(x, y)) throw Error(ErrorCode::NotCrossing, to_string(x) + " and " + to_string(y) + " do not cross");
    Counter c(frag);
    const Vertex mu = x.lo(), nu = x.hi();
    const Vertex pi = y.lo(), rho = y.hi();
    auto row = [&](const Vertex& v) { return c.labels_from(c.require_position(v)); };
    const auto from_mu = row(mu);
    const auto from_nu = row(nu);
    const auto from_pi = row(pi);
    auto at = [&](const std::vector<BigInt>& lab, const Vertex& v) { return lab[c.require_position(v)]; };
    const BigInt lhs = at(from_mu, nu) * at(from_pi, rho);
    const BigInt rhs = at(from_mu, pi) * at(from_nu, rho) + at(from_mu, rho) * at(from_nu, pi);
    return lhs == rhs;
}

}  // namespace sl2
