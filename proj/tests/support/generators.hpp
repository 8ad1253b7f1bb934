#pragma once

#include "sl2/disc_model.hpp"
#include "sl2/tiling.hpp"

#include <random>
#include <utility>
#include <vector>

namespace gen {

using Rng = std::mt19937_64;

// Random triangulation of a convex m-gon on positions 0..m-1, as diagonals.
// Forced chords are kept and must not cross.
std::vector<std::pair<int, int>> triangulate(Rng& rng, int m, const std::vector<std::pair<int, int>>& forced = {});

struct Run {
    sl2::Interval interval;
    sl2::Index lo;
    sl2::Index count;
};

// Fragment on consecutive runs of vertices, in cyclic order.
sl2::DiscFragment fragment_on_runs(const sl2::DiscShape& shape, const std::vector<Run>& runs,
                                   const std::vector<std::pair<int, int>>& diagonals);

// Random fragment with each run length drawn from [lo, hi].
sl2::DiscFragment random_fragment(Rng& rng, const sl2::DiscShape& shape, int lo, int hi);

// D4 fragment containing a II-IV arc, so no I-III arc can occur.
sl2::DiscFragment separated_fragment(Rng& rng, int lo, int hi);

sl2::IndexRange run_range(const sl2::DiscFragment& f, sl2::Interval j);

struct Instance {
    sl2::DiscFragment fragment;
    sl2::TilingWindow window;
    sl2::OnesCertificate certificate;
};

// Window over all I and III vertices, with a complete certificate whose
// boundedness flags follow the fragment shape.
Instance instance_from(const sl2::DiscFragment& f);

enum class Target { Case1, Case2First, Case2Third, Case3, Case4Row, Case4Column, Case5, Case6 };

Instance sample_case(Rng& rng, Target target);

}  // namespace gen
