#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sepfam/separators.hpp"

namespace sepfam {

enum class SeparatorClass { Halfplane, Disc, Convex };

const char* to_string(SeparatorClass cls);

// All combinatorially distinct traces of one separator class on a small
// point set. masks[i] has bit k set iff point k lies in the i-th trace;
// witnesses[i] is a concrete separator realizing exactly that mask.
struct TraceSet {
    SeparatorClass cls;
    std::vector<std::uint32_t> masks;
    std::vector<Separator> witnesses;
};

// Exact minimum family size over a trace set. When no subfamily separates
// X, feasible is false and blocked names the lexicographically first pair
// no mask splits.
struct OracleResult {
    bool feasible = false;
    std::size_t size = 0;
    SeparatingFamily family;
    std::uint64_t explored = 0;
    std::optional<WitnessPair> blocked;
};

std::uint32_t trace_mask(const Separator& s, const PointSet& x);

// Enumerators; each witness is re-verified against its mask. The _serial
// variants produce bit-identical output without threads.
TraceSet halfplane_traces(const PointSet& x);   // 2 <= |X| <= 20
TraceSet halfplane_traces_serial(const PointSet& x);
TraceSet disc_traces(const PointSet& x);        // 2 <= |X| <= 16
TraceSet disc_traces_serial(const PointSet& x);
TraceSet convex_traces(const PointSet& x);      // 2 <= |X| <= 14
TraceSet convex_traces_serial(const PointSet& x);

// Branch and bound over uncovered point pairs, deterministic. Result size
// is asserted to lie in [ceil(log2 n), n-1] whenever feasible.
OracleResult min_separating_size(const TraceSet& t, const PointSet& x);

// Independent cross-check: plain combination enumeration by family size.
// Exponential; intended for tiny instances.
OracleResult min_separating_size_exhaustive(const TraceSet& t, const PointSet& x);

// s(X, class): trace enumeration composed with the exact solver.
OracleResult s_value(const PointSet& x, SeparatorClass cls);

}  // namespace sepfam
