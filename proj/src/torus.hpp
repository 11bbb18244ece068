#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spectral.hpp"

namespace czlab {

// Point of T^r with circle parametrization z_i = exp(pi*i*t_i), t_i in R/2Z.
struct TorusPoint {
    std::vector<Rational> coordinates;
};

// Polyline in the universal cover R^r with exact rational vertices. Walls
// {z_i = 1} lift to {t_i in 2Z}; vertices must stay off every wall.
struct LiftedPath {
    std::vector<std::vector<Rational>> points;
};

// Weighted union of the co-oriented subtori {z_i = 1}; weights come from the
// elliptic signatures.
struct IndexCycle {
    std::vector<std::int64_t> weights;
};

IndexCycle index_cycle_of(const PathDescriptor& d);

// k-th iterate of the eigenvalue vector: coordinates k*theta_i mod 2.
// Requires 0 <= k <= horizon.
TorusPoint eigenvalue_vector(const PathDescriptor& d, std::int64_t k);

// Lift of the translated generating arc lambda^k A: the straight segment from
// k*theta to (k+1)*theta in the cover. Requires 1 <= k, k + 1 <= horizon.
LiftedPath lifted_arc(const PathDescriptor& d, std::int64_t k);

// Signed crossing count of a lifted path with the cycle: per coordinate,
// up-crossings minus down-crossings of the even-integer walls, weighted.
// Crossing with increasing coordinate counts +1. Throws EndpointOnCycle when
// a vertex has a coordinate in 2Z and DegenerateSegment when a segment lies
// inside a wall.
std::int64_t path_intersection(const LiftedPath& path, const IndexCycle& cycle);

// <lambda^k A, T> for an elliptic-only descriptor, computed geometrically via
// path_intersection; 2 * result = mu'_k is a tested cross-module identity.
std::int64_t arc_intersection(const PathDescriptor& d, std::int64_t k);

struct IntersectDivisibilityReport {
    bool passed = true;
    // first (k, m) with l not dividing <lambda^k A u ... u lambda^m A, T>
    std::optional<std::pair<std::int64_t, std::int64_t>> first_violation;
    std::int64_t arcs_checked = 0;
    std::string details;
};

// Under divisibility condition (b) for l, every iterated-arc intersection
// index is divisible by l. Scans all 1 <= k <= m <= K. Requires an
// elliptic-only descriptor certified to K + 1 and condition (b) to hold
// (HypothesisNotMet otherwise).
IntersectDivisibilityReport verify_intersect_divisibility(const PathDescriptor& d, std::int64_t l,
                                                          std::int64_t k_max);

}  // namespace czlab
