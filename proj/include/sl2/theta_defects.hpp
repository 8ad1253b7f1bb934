#pragma once

#include "sl2/bigint.hpp"
#include "sl2/disc_model.hpp"
#include "sl2/tiling.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace sl2 {

struct ThetaScope {
    IndexRange rows;
    IndexRange cols;
    // The certificate lists every 1 touching the window.
    bool complete = false;
    // The window is treated as the whole tiling.
    bool closed = false;
};

struct ThetaSet {
    std::set<Arc> connecting;
    std::set<Arc> internal_I;
    std::set<Arc> internal_III;
    ThetaScope scope;

    std::set<Arc> all() const;
    std::vector<Arc> arcs_at(const Vertex& v) const;
    std::size_t size() const { return connecting.size() + internal_I.size() + internal_III.size(); }
};

// Throws InconsistentCertificate or CrossingDetected.
ThetaSet build_theta(const TilingWindow& w, const OnesCertificate& cert);
ThetaSet window_theta(const TilingWindow& w);

enum class Saturation { Saturated, NonSaturated };

// Throws OutOfScope.
Saturation saturation(const ThetaSet& theta, const Vertex& v);

// True when every Theta arc at v is known.
bool in_margin(const ThetaSet& theta, const Vertex& v);

struct DefectMap {
    std::map<Index, BigInt> def_p;
    std::map<Index, BigInt> def_q;
};

// Window-interior vertices in margin only.
DefectMap defects(const TilingWindow& w, const OnesCertificate& cert);
DefectMap defects(const TilingWindow& w, const ThetaSet& theta);

// Quiddity minus one minus the Theta arcs at v. Throws InsufficientMargin.
BigInt raw_defect(const TilingWindow& w, const ThetaSet& theta, const Vertex& v);

// p(b_-1, b_1) - 1 when no connecting arc ends at v; empty when not applicable
// or the landmarks leave the window.
std::optional<BigInt> internal_defect_formula(const TilingWindow& w, const ThetaSet& theta, const Vertex& v);
// t(b_-1, v_j) + t(b_1, v_1) - 2 and its III twin.
std::optional<BigInt> connecting_defect_formula(const TilingWindow& w, const ThetaSet& theta, const Vertex& v);

// Anticlockwise is increasing index on both I and III.
enum class Direction { Clockwise, Anticlockwise };

struct ArcOrEdge {
    Arc arc;
    bool edge = false;
};

// Throws InsufficientMargin.
ArcOrEdge longest_arc(const ThetaSet& theta, const Vertex& v, Direction dir);

}  // namespace sl2
