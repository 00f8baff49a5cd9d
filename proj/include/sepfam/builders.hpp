#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sepfam/separators.hpp"

namespace sepfam {

// Remaining points on either side of the step-0 median boundary, recorded
// before each pair-removal step. states[j] holds the sides after j removals.
struct SplitState {
    std::vector<std::size_t> q, r;
    Halfplane boundary;
    std::size_t step;
};

struct SplitRun {
    SeparatingFamily family;
    std::vector<SplitState> states;
};

// One round of the convex-set builder: the chosen convex-position subset,
// its hull, the hull of the non-chosen points inside it (absent when there
// are none), and the binary polygons that separate within the subset.
struct ConvexStepRecord {
    std::vector<std::size_t> qi;
    ConvexPolygon hull;
    std::optional<ConvexPolygon> inner;
    std::vector<ConvexPolygon> bits;
    std::vector<std::size_t> removed;
};

struct ConvexRun {
    SeparatingFamily family;
    std::vector<ConvexStepRecord> steps;
};

// n-1 halfplanes cut between consecutive projections onto a generic
// direction; the i-th contains exactly the i lowest points. Separates any
// point set with pairwise distinct points.
SeparatingFamily prefix_halfplanes(const PointSet& x);

// n/2 halfplanes for general-position sets: a median halfplane, then one
// halfplane per removed hull-edge pair. Odd n isolates the point of extreme
// projection with one extra halfplane first, keeping the total at
// ceil(n/2).
SeparatingFamily halfplane_separate(const PointSet& x);
SplitRun halfplane_separate_run(const PointSet& x);

// Same skeleton with discs, which needs no general-position assumption:
// ceil(n/2) discs separating any set of two or more distinct points.
SeparatingFamily disc_separate(const PointSet& x);
SplitRun disc_separate_run(const PointSet& x);

// ceil(log k) polygons over the k convex-position points x[q[0..k-1]]:
// polygon j is the hull of the members whose position in q has bit j set.
// Their traces on q are exactly the bit classes.
std::vector<ConvexPolygon> binary_family(const PointSet& x, const std::vector<std::size_t>& q);

// A maximum-cardinality subset in convex position (indices, ascending),
// computed by an exact longest-convex-chain dynamic program over directed
// edges in angular order, one pass per bottom-most pivot.
std::vector<std::size_t> largest_convex_subset(const PointSet& x);
std::vector<std::size_t> largest_convex_subset_serial(const PointSet& x);

// The convex-set builder: repeatedly extracts floor(log2(n)/4) points in
// convex position, emitting their hull, the hull of bystanders caught
// inside, and a binary family on the extracted points, until at most
// sqrt(n) points remain; those get clearance-radius discs. Sets of at most
// 16 points go to disc_separate directly.
SeparatingFamily convex_separate(const PointSet& x);
ConvexRun convex_separate_run(const PointSet& x);

// Drops the first member whose removal keeps the family separating,
// repeatedly, until the family is minimal; minimal separating families have
// at most n-1 members.
SeparatingFamily prune_to_minimal(const SeparatingFamily& fam, const PointSet& x);

}  // namespace sepfam
