#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sepfam/rational.hpp"

namespace sepfam {

struct Point {
    Rational x;
    Rational y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

using PointSet = std::vector<Point>;

// Nonzero vector. Used for projection directions; never normalized.
struct Direction {
    Rational dx;
    Rational dy;
};

enum class Orientation { Clockwise, Collinear, CounterClockwise };

// Sign of the cross product (b-a) x (c-a): +1 for a counterclockwise turn,
// -1 for clockwise, 0 for collinear. Exact.
int orientation_sign(const Point& a, const Point& b, const Point& c);
Orientation orientation(const Point& a, const Point& b, const Point& c);

struct CollinearTriple {
    std::size_t a, b, c;
};

// First collinear index triple in lexicographic order, if any. Duplicate
// points count as collinear with everything, so they are reported too.
std::optional<CollinearTriple> find_collinear_triple(const PointSet& pts);
bool is_general_position(const PointSet& pts);

// Indices of the convex hull in counterclockwise order, starting from the
// lexicographically smallest point. Collinear boundary points are dropped:
// the result is the minimal vertex set. Works for any input size; a single
// point yields {0}, two distinct points yield both.
std::vector<std::size_t> convex_hull(const PointSet& pts);

// A direction that is neither parallel nor perpendicular to any line through
// two points of the set, so projections onto it are pairwise distinct and so
// are projections onto its perpendicular. Deterministic. Needs |pts| >= 2.
Direction generic_direction(const PointSet& pts);

// A positive radius r such that displacing any single point by any vector of
// L-infinity norm <= r keeps the orientation of every non-collinear triple
// and keeps all points distinct. Also at most 1/2 (handy as a unit-free cap),
// at most one third of the smallest pairwise L-infinity distance, and at most
// one third of every point's L1 distance to every line through two others.
// Needs |pts| >= 2 and distinct points.
Rational clearance(const PointSet& pts);
Rational clearance_serial(const PointSet& pts);  // reference implementation

// Dot product of a direction with a point, i.e. the projection coordinate.
inline Rational project(const Direction& d, const Point& p) { return d.dx * p.x + d.dy * p.y; }

}  // namespace sepfam
