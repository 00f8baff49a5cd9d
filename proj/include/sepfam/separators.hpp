#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sepfam/geometry.hpp"

namespace sepfam {

// Closed halfplane a*x + b*y <= c with (a, b) != (0, 0).
struct Halfplane {
    Rational a, b, c;
};

// Closed disc; the radius is stored squared so everything stays rational.
struct Disc {
    Point center;
    Rational radius_sq;
};

// Vertices in counterclockwise order, no three collinear, all distinct.
// One vertex (a point) and two vertices (a segment) are allowed so that
// hulls of tiny sets are still usable as separators.
struct ConvexPolygon {
    std::vector<Point> vertices;
};

using Separator = std::variant<Halfplane, Disc, ConvexPolygon>;

struct SeparatingFamily {
    std::vector<Separator> separators;
    std::string provenance;

    std::size_t size() const { return separators.size(); }
};

bool contains(const Halfplane& h, const Point& p);
bool contains(const Disc& d, const Point& p);
bool contains(const ConvexPolygon& g, const Point& p);
bool contains(const Separator& s, const Point& p);

// Throws precondition_error unless the separator satisfies its shape
// invariant (nonzero normal, positive squared radius, strictly convex
// counterclockwise vertex list).
void validate_separator(const Separator& s);

// True when exactly one of p, q lies in s. The points must differ.
bool separates(const Separator& s, const Point& p, const Point& q);

// Membership of every point of pts in s, in input order.
std::vector<bool> trace(const Separator& s, const PointSet& pts);

struct WitnessPair {
    std::size_t first, second;
};

// Lexicographically first pair of points no member of the family separates,
// or nullopt when the family separates every pair.
std::optional<WitnessPair> unseparated_pair(const SeparatingFamily& fam, const PointSet& pts);

bool is_separating(const SeparatingFamily& fam, const PointSet& pts);

// Row i is the 0/1 membership sequence of point i across the family, in
// family order. Rows are pairwise distinct exactly when fam separates pts.
std::vector<std::vector<bool>> signature_table(const SeparatingFamily& fam, const PointSet& pts);

}  // namespace sepfam
