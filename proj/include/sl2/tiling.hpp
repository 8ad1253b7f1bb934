#pragma once

#include "sl2/bigint.hpp"
#include "sl2/disc_model.hpp"
#include "sl2/frieze.hpp"

#include <utility>
#include <vector>

namespace sl2 {

struct IndexRange {
    Index lo = 0;
    Index hi = 0;

    Index size() const { return hi - lo + 1; }
    bool contains(Index x) const { return lo <= x && x <= hi; }
    bool operator==(const IndexRange&) const = default;
};

// Rows index interval I (b, downwards), columns index interval III (v, rightwards).
class TilingWindow {
public:
    TilingWindow() = default;
    TilingWindow(IndexRange rows, IndexRange cols);
    static TilingWindow from_rows(IndexRange rows, IndexRange cols, const std::vector<std::vector<BigInt>>& values);

    const IndexRange& rows() const { return rows_; }
    const IndexRange& cols() const { return cols_; }
    bool contains(Index b, Index v) const { return rows_.contains(b) && cols_.contains(v); }
    const BigInt& at(Index b, Index v) const;
    BigInt& at(Index b, Index v);

    TilingWindow sub(IndexRange rows, IndexRange cols) const;
    TilingWindow transposed() const;

    bool operator==(const TilingWindow&) const = default;

private:
    std::size_t offset(Index b, Index v) const;

    IndexRange rows_;
    IndexRange cols_;
    std::vector<BigInt> data_;
};

using Cell = std::pair<Index, Index>;

struct ZigZag {
    // Ordered from the south-west end (large b, small v) to the north-east end.
    std::vector<Cell> points;
    bool left_bounded = true;   // south-west end
    bool right_bounded = true;  // north-east end

    bool operator==(const ZigZag&) const = default;
};

// Facts about the tiling beyond the window, asserted by the caller.
struct OnesCertificate {
    ZigZag zigzag;
    // Internal 1-entries p(a,d) = 1 and q(u,x) = 1 with a + 2 <= d.
    std::vector<Cell> p_ones;
    std::vector<Cell> q_ones;
    // Asserts that zigzag lists every 1-entry in the window's rows and columns, and
    // that p_ones / q_ones list every internal 1 with an endpoint in the window.
    bool complete = false;

    bool operator==(const OnesCertificate&) const = default;
};

TilingWindow extend_from_seed(Index f, Index g, IndexRange cols, const std::vector<BigInt>& row, IndexRange rows,
                              const std::vector<BigInt>& col);

ValidationReport validate_window(const TilingWindow& w);

struct DerivedFriezes {
    FriezeWindow p;
    FriezeWindow q;
};

DerivedFriezes derived_friezes(const TilingWindow& w);
// p(a,d) computed from the column pair (col, col + 1).
BigInt p_from_columns(const TilingWindow& w, Index a, Index d, Index col);
// q(u,x) computed from the row pair (row, row + 1).
BigInt q_from_rows(const TilingWindow& w, Index u, Index x, Index row);

// Throws ShapeViolation when the 1-entries do not form a zig-zag.
ZigZag ones_zigzag(const TilingWindow& w);
bool is_zigzag_shaped(const std::vector<Cell>& points);

struct MinReport {
    BigInt value;
    std::vector<Cell> positions;
    bool unique() const { return positions.size() == 1; }
};

// Throws MinIsOne when the window contains a 1.
MinReport unique_min(const TilingWindow& w);

enum class Axis { Row, Column };

TilingWindow delete_at_local_max(const TilingWindow& w, Axis axis, Index idx);

}  // namespace sl2
