#pragma once

#include "sl2/bigint.hpp"
#include "sl2/disc_model.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace sl2 {

enum class FriezeKind { Infinite, FiniteCC };

// Entries e(a,d) for lo <= a <= hi and a <= d <= min(hi, a + depth).
// Only the a <= d half is stored.
struct FriezeWindow {
    FriezeKind kind = FriezeKind::Infinite;
    Index lo = 0;
    Index hi = 0;
    Index depth = 0;
    // Number of polygon vertices for the finite kind, 0 otherwise.
    Index period = 0;
    std::map<std::pair<Index, Index>, BigInt> entries;

    bool has(Index a, Index d) const { return entries.count({a, d}) != 0; }
    const BigInt& at(Index a, Index d) const;
    void set(Index a, Index d, BigInt value) { entries[{a, d}] = std::move(value); }
    // e(b-1, b+1) for lo < b < hi.
    std::vector<BigInt> quiddity() const;
};

// quiddity[k] is the value at position start + k.
FriezeWindow frieze_from_quiddity(const std::vector<BigInt>& quiddity, Index start, Index depth);

FriezeWindow cc_frieze_from_polygon(const DiscFragment& tri);

// Polygon on vertices a..d of interval I, closed by the side {a, d}.
DiscFragment triangulation_from_cc_frieze(const FriezeWindow& fund, Index a, Index d);

ValidationReport validate_frieze(const FriezeWindow& w);

}  // namespace sl2
