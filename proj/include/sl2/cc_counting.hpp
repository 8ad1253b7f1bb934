#pragma once

#include "sl2/bigint.hpp"
#include "sl2/disc_model.hpp"
#include "sl2/frieze.hpp"
#include "sl2/tiling.hpp"

#include <array>
#include <map>
#include <vector>

namespace sl2 {

struct LabelMap {
    Vertex base;
    std::map<Vertex, BigInt> labels;

    const BigInt& at(const Vertex& v) const;
};

// Triangle decomposition of a fragment, reused across counting calls.
class Counter {
public:
    // Throws NotFullyTriangulated.
    explicit Counter(const DiscFragment& frag);

    const DiscFragment& fragment() const { return frag_; }
    std::vector<BigInt> labels_from(std::size_t base) const;
    std::size_t require_position(const Vertex& v) const;
    const std::vector<std::array<std::size_t, 3>>& triangles() const { return triangles_; }

private:
    DiscFragment frag_;
    std::map<Vertex, std::size_t> pos_;
    std::vector<std::vector<std::size_t>> adjacent_;
    std::vector<std::array<std::size_t, 3>> triangles_;
    std::vector<std::vector<std::size_t>> triangles_at_;
};

LabelMap cc_labels(const DiscFragment& frag, const Vertex& base);
BigInt cc_value(const DiscFragment& frag, const Vertex& mu, const Vertex& nu);

struct PhiWindow {
    TilingWindow t;
    FriezeWindow p;
    FriezeWindow q;
};

PhiWindow phi_window(const DiscFragment& frag, IndexRange rows, IndexRange cols);
TilingWindow phi_tiling(const Counter& counter, IndexRange rows, IndexRange cols);

// Throws NotCrossing when x and y do not cross.
bool ptolemy_check(const DiscFragment& frag, const Arc& x, const Arc& y);

}  // namespace sl2
