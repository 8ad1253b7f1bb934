#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sl2 {

using Index = std::int64_t;

// Anticlockwise order around the disc: I, II, III, IV.
enum class Interval : std::uint8_t { I = 0, II = 1, III = 2, IV = 3 };

std::string to_string(Interval j);
Interval interval_from_string(const std::string& s);

struct Vertex {
    Interval interval = Interval::I;
    Index index = 0;

    // Linear order: by interval, then by index. A list is in cyclic order
    // exactly when some rotation of it is increasing in this order.
    auto operator<=>(const Vertex&) const = default;
};

inline Vertex vI(Index i) { return {Interval::I, i}; }
inline Vertex vII(Index i) { return {Interval::II, i}; }
inline Vertex vIII(Index i) { return {Interval::III, i}; }
inline Vertex vIV(Index i) { return {Interval::IV, i}; }

std::string to_string(const Vertex& v);

// Unordered pair of distinct vertices, stored with lo < hi.
class Arc {
public:
    Arc(Vertex x, Vertex y);

    const Vertex& lo() const { return lo_; }
    const Vertex& hi() const { return hi_; }
    bool internal() const { return lo_.interval == hi_.interval; }
    bool has(const Vertex& v) const { return lo_ == v || hi_ == v; }
    Vertex other(const Vertex& v) const { return lo_ == v ? hi_ : lo_; }

    auto operator<=>(const Arc&) const = default;

private:
    Vertex lo_;
    Vertex hi_;
};

std::string to_string(const Arc& a);

struct DiscShape {
    int n = 4;
    std::vector<Interval> intervals;

    static DiscShape d2();
    static DiscShape d3_with_II();
    static DiscShape d3_with_IV();
    static DiscShape d4();

    bool has(Interval j) const;
    std::string name() const;

    bool operator==(const DiscShape&) const = default;
};

// Throws IllegalInterval when v is not on one of the shape's intervals.
void require_legal(const DiscShape& shape, const Vertex& v);

bool in_cyclic_order(const DiscShape& shape, const std::vector<Vertex>& vs);

bool arcs_cross(const DiscShape& shape, const Arc& x, const Arc& y);
bool chords_cross(const Arc& x, const Arc& y);

std::pair<Vertex, Vertex> vertex_neighbors(const Vertex& v);
bool are_neighbors(const Vertex& x, const Vertex& y);

struct DiscFragment {
    DiscShape shape;
    std::vector<Vertex> boundary;
    std::vector<Arc> diagonals;

    // Consecutive boundary pairs; a 2-gon has a single side.
    std::vector<Arc> sides() const;
    // Sides that are arcs rather than disc edges.
    std::vector<Arc> closing_sides() const;
    bool fully_triangulated() const;
    std::optional<std::size_t> position(const Vertex& v) const;
    bool contains(const Vertex& v) const { return position(v).has_value(); }
};

// Sorts boundary into increasing order and diagonals lexicographically.
DiscFragment canonical(DiscFragment f);

struct ValidationReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};

ValidationReport validate_fragment(const DiscFragment& frag, const std::set<Arc>& ambient_arcs);
// Uses the fragment's own closing sides as the ambient arcs.
ValidationReport validate_fragment(const DiscFragment& frag);

DiscFragment close_window(const DiscShape& shape, const std::set<Arc>& ambient_arcs,
                          const std::set<Vertex>& required);

}  // namespace sl2
