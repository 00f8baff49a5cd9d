#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sepfam/geometry.hpp"

namespace sepfam {

// Parameters of the cup-cap recursion. The gap is the horizontal unit
// inserted between glued pieces; both factors scale the final coordinates
// and must be positive (slope inequalities are preserved under positive
// axis scaling).
struct EsParams {
    int k;
    Rational hscale{1};
    Rational vscale{1};
};

// A point set doubled by the twin perturbation: parent p becomes p + o and
// p - o where o is parallel to `direction` and has L-infinity norm
// epsilon/2. Pairs index into `points`; pair t is (2t, 2t+1).
struct TwinSet {
    PointSet points;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    PointSet parents;
    Rational epsilon;
    Direction direction;
};

// Points (0,0), (1,0), ..., (n-1,0).
PointSet collinear_points(std::size_t n);

// n distinct rational points on the unit circle, parameters t = (i+1)/(n+1)
// mapped through t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)); angularly sorted and
// in convex position.
PointSet circle_points(std::size_t n);

// 2^(k-2) points in general position with no k points in convex position
// (and a (k-1)-point convex subset, so the value is exact). 3 <= k <= 8.
PointSet erdos_szekeres_set(int k);
PointSet erdos_szekeres_set(const EsParams& params);

// First m construction-order points of the smallest erdos_szekeres_set
// whose size reaches m; in general position with largest convex subset
// at most k-1 for that k. 2 <= m <= 64.
PointSet capped_convex_parent(std::size_t m);

// Doubles a general-position parent set into twins. The offset direction is
// generic for the parents and the offset length is half the parents'
// clearance, which preserves every orientation sign when one twin of each
// pair stands in for its parent.
TwinSet twin_set(const PointSet& parent);

// n integer-coordinate points in [0, bounding)^2 from a seeded
// deterministic stream, rejection-sampled into general position.
PointSet random_general_position(std::size_t n, std::uint64_t seed, std::uint64_t bounding = 1u << 20);

}  // namespace sepfam
