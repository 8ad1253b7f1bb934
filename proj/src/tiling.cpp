#include "sl2/tiling.hpp"

#include "sl2/error.hpp"

#include <algorithm>

namespace sl2 {

namespace {

std::string cell_name(Index b, Index v) { return "(" + std::to_string(b) + "," + std::to_string(v) + ")"; }

}  // namespace

TilingWindow::TilingWindow(IndexRange rows, IndexRange cols) : rows_(rows), cols_(cols) {
    if (rows.hi < rows.lo || cols.hi < cols.lo) throw Error(ErrorCode::InvalidInput, "empty window range");
    data_.assign(static_cast<std::size_t>(rows.size() * cols.size()), BigInt(0));
}

TilingWindow TilingWindow::from_rows(IndexRange rows, IndexRange cols, const std::vector<std::vector<BigInt>>& values) {
    TilingWindow w(rows, cols);
    if (static_cast<Index>(values.size()) != rows.size())
        throw Error(ErrorCode::InvalidInput, "row count does not match the row range");
    for (Index b = rows.lo; b <= rows.hi; ++b) {
        const auto& r = values[static_cast<std::size_t>(b - rows.lo)];
        if (static_cast<Index>(r.size()) != cols.size())
            throw Error(ErrorCode::InvalidInput, "column count does not match the column range");
        for (Index v = cols.lo; v <= cols.hi; ++v) w.at(b, v) = r[static_cast<std::size_t>(v - cols.lo)];
    }
    return w;
}

std::size_t TilingWindow::offset(Index b, Index v) const {
    if (!contains(b, v)) throw Error(ErrorCode::OutOfScope, "cell " + cell_name(b, v) + " is outside the window");
    return static_cast<std::size_t>((b - rows_.lo) * cols_.size() + (v - cols_.lo));
}

const BigInt& TilingWindow::at(Index b, Index v) const { return data_[offset(b, v)]; }
BigInt& TilingWindow::at(Index b, Index v) { return data_[offset(b, v)]; }

TilingWindow TilingWindow::sub(IndexRange rows, IndexRange cols) const {
    TilingWindow out(rows, cols);
    for (Index b = rows.lo; b <= rows.hi; ++b)
        for (Index v = cols.lo; v <= cols.hi; ++v) out.at(b, v) = at(b, v);
    return out;
}

TilingWindow TilingWindow::transposed() const {
    TilingWindow out(cols_, rows_);
    for (Index b = rows_.lo; b <= rows_.hi; ++b)
        for (Index v = cols_.lo; v <= cols_.hi; ++v) out.at(v, b) = at(b, v);
    return out;
}

TilingWindow extend_from_seed(Index f, Index g, IndexRange cols, const std::vector<BigInt>& row, IndexRange rows,
                              const std::vector<BigInt>& col) {
    if (static_cast<Index>(row.size()) != cols.size() || static_cast<Index>(col.size()) != rows.size())
        throw Error(ErrorCode::InvalidInput, "seed lengths do not match their ranges");
    if (!rows.contains(f) || !cols.contains(g)) throw Error(ErrorCode::InvalidInput, "seed crossing lies outside the window");
    TilingWindow w(rows, cols);
    for (Index v = cols.lo; v <= cols.hi; ++v) w.at(f, v) = row[static_cast<std::size_t>(v - cols.lo)];
    for (Index b = rows.lo; b <= rows.hi; ++b) {
        const auto& x = col[static_cast<std::size_t>(b - rows.lo)];
        if (b == f && x != w.at(f, g)) throw Error(ErrorCode::InvalidInput, "row and column disagree at the crossing");
        w.at(b, g) = x;
    }
    for (Index v = cols.lo; v <= cols.hi; ++v)
        if (w.at(f, v) <= 0) throw Error(ErrorCode::NonPositive, "seed value at " + cell_name(f, v) + " is not positive");
    for (Index b = rows.lo; b <= rows.hi; ++b)
        if (w.at(b, g) <= 0) throw Error(ErrorCode::NonPositive, "seed value at " + cell_name(b, g) + " is not positive");

    // value = (x * y + sign) / z, exact and positive
    auto solve = [&](Index b, Index v, const BigInt& x, const BigInt& y, int sign, const BigInt& z) {
        BigInt num = x * y + sign;
        if (num <= 0) throw Error(ErrorCode::NonPositive, "seed forces a non-positive value at " + cell_name(b, v));
        if (num % z != 0) throw Error(ErrorCode::NonIntegral, "seed forces a non-integer value at " + cell_name(b, v));
        w.at(b, v) = num / z;
    };

    for (Index b = f + 1; b <= rows.hi; ++b) {
        for (Index v = g + 1; v <= cols.hi; ++v) solve(b, v, w.at(b - 1, v), w.at(b, v - 1), 1, w.at(b - 1, v - 1));
        for (Index v = g - 1; v >= cols.lo; --v) solve(b, v, w.at(b - 1, v), w.at(b, v + 1), -1, w.at(b - 1, v + 1));
    }
    for (Index b = f - 1; b >= rows.lo; --b) {
        for (Index v = g + 1; v <= cols.hi; ++v) solve(b, v, w.at(b, v - 1), w.at(b + 1, v), -1, w.at(b + 1, v - 1));
        for (Index v = g - 1; v >= cols.lo; --v) solve(b, v, w.at(b, v + 1), w.at(b + 1, v), 1, w.at(b + 1, v + 1));
    }
    return w;
}

ValidationReport validate_window(const TilingWindow& w) {
    ValidationReport rep;
    const auto& r = w.rows();
    const auto& c = w.cols();
    for (Index b = r.lo; b <= r.hi; ++b)
        for (Index v = c.lo; v <= c.hi; ++v)
            if (w.at(b, v) < 1) rep.issues.push_back("entry at " + cell_name(b, v) + " is not positive");
    for (Index b = r.lo; b < r.hi; ++b)
        for (Index v = c.lo; v < c.hi; ++v) {
            BigInt det = w.at(b, v) * w.at(b + 1, v + 1) - w.at(b, v + 1) * w.at(b + 1, v);
            if (det != 1)
                rep.issues.push_back("determinant at " + cell_name(b, v) + " is " + det.str());
        }
    return rep;
}

BigInt p_from_columns(const TilingWindow& w, Index a, Index d, Index col) {
    return w.at(a, col) * w.at(d, col + 1) - w.at(a, col + 1) * w.at(d, col);
}

BigInt q_from_rows(const TilingWindow& w, Index u, Index x, Index row) {
    return w.at(row, u) * w.at(row + 1, x) - w.at(row, x) * w.at(row + 1, u);
}

DerivedFriezes derived_friezes(const TilingWindow& w) {
    const auto& r = w.rows();
    const auto& c = w.cols();
    if (c.size() < 2) throw Error(ErrorCode::WindowTooSmall, "p needs at least two columns");
    if (r.size() < 2) throw Error(ErrorCode::WindowTooSmall, "q needs at least two rows");
    DerivedFriezes out;
    out.p.lo = r.lo;
    out.p.hi = r.hi;
    out.p.depth = r.hi - r.lo;
    for (Index a = r.lo; a <= r.hi; ++a)
        for (Index d = a; d <= r.hi; ++d) out.p.set(a, d, p_from_columns(w, a, d, c.lo));
    out.q.lo = c.lo;
    out.q.hi = c.hi;
    out.q.depth = c.hi - c.lo;
    for (Index u = c.lo; u <= c.hi; ++u)
        for (Index x = u; x <= c.hi; ++x) out.q.set(u, x, q_from_rows(w, u, x, r.lo));
    return out;
}

bool is_zigzag_shaped(const std::vector<Cell>& points) {
    for (std::size_t k = 0; k + 1 < points.size(); ++k) {
        const auto& [b0, v0] = points[k];
        const auto& [b1, v1] = points[k + 1];
        const bool up = b1 < b0 && v1 == v0;
        const bool right = b1 == b0 && v1 > v0;
        if (!up && !right) return false;
    }
    return true;
}

ZigZag ones_zigzag(const TilingWindow& w) {
    ZigZag z;
    for (Index b = w.rows().lo; b <= w.rows().hi; ++b)
        for (Index v = w.cols().lo; v <= w.cols().hi; ++v)
            if (w.at(b, v) == 1) z.points.emplace_back(b, v);
    std::sort(z.points.begin(), z.points.end(), [](const Cell& x, const Cell& y) {
        if (x.first != y.first) return x.first > y.first;
        return x.second < y.second;
    });
    if (!is_zigzag_shaped(z.points)) throw Error(ErrorCode::ShapeViolation, "the 1-entries do not form a zig-zag");
    return z;
}

MinReport unique_min(const TilingWindow& w) {
    MinReport rep;
    bool first = true;
    for (Index b = w.rows().lo; b <= w.rows().hi; ++b)
        for (Index v = w.cols().lo; v <= w.cols().hi; ++v) {
            const auto& x = w.at(b, v);
            if (first || x < rep.value) {
                rep.value = x;
                rep.positions = {{b, v}};
                first = false;
            } else if (x == rep.value) {
                rep.positions.emplace_back(b, v);
            }
        }
    if (rep.value <= 1) throw Error(ErrorCode::MinIsOne, "the window contains an entry equal to 1");
    return rep;
}

TilingWindow delete_at_local_max(const TilingWindow& w, Axis axis, Index idx) {
    if (axis == Axis::Row) return delete_at_local_max(w.transposed(), Axis::Column, idx).transposed();
    const auto& r = w.rows();
    const auto& c = w.cols();
    if (idx <= c.lo || idx >= c.hi) throw Error(ErrorCode::NotLocalMax, "column " + std::to_string(idx) + " is not interior");
    bool found = false;
    for (Index b = r.lo; b <= r.hi && !found; ++b)
        found = w.at(b, idx - 1) < w.at(b, idx) && w.at(b, idx) > w.at(b, idx + 1);
    if (!found) throw Error(ErrorCode::NotLocalMax, "no strict local maximum in column " + std::to_string(idx));
    for (Index b = r.lo; b <= r.hi; ++b)
        if (w.at(b, idx) != w.at(b, idx - 1) + w.at(b, idx + 1))
            throw Error(ErrorCode::InvalidInput, "sum identity fails at " + cell_name(b, idx));
    TilingWindow out(r, {c.lo, c.hi - 1});
    for (Index b = r.lo; b <= r.hi; ++b)
        for (Index v = c.lo; v < c.hi; ++v) out.at(b, v) = w.at(b, v < idx ? v : v + 1);
    return out;
}

}  // namespace sl2
