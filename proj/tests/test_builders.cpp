#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "sepfam/builders.hpp"
#include "sepfam/constructions.hpp"
#include "sepfam/io.hpp"

using namespace sepfam;

namespace {

std::size_t ceil_half(std::size_t n) { return (n + 1) / 2; }

// Exhaustive reference for the DP: the largest subset whose convex hull uses
// every chosen point.
std::size_t brute_max_convex(const PointSet& x) {
    const std::size_t n = x.size();
    std::size_t best = std::min<std::size_t>(n, 2);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        PointSet sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) sub.push_back(x[i]);
        if (sub.size() <= best) continue;
        if (convex_hull(sub).size() == sub.size()) best = sub.size();
    }
    return best;
}

bool in_convex_position(const PointSet& x, const std::vector<std::size_t>& idxs) {
    if (idxs.size() <= 2) return true;
    PointSet sub;
    for (std::size_t i : idxs) sub.push_back(x[i]);
    return convex_hull(sub).size() == sub.size();
}

}  // namespace

TEST_CASE("prefix_halfplanes separates with n-1 nested cuts") {
    for (const PointSet& x : {collinear_points(5), circle_points(6), random_general_position(9, 3)}) {
        SeparatingFamily fam = prefix_halfplanes(x);
        CHECK(fam.size() == x.size() - 1);
        CHECK(is_separating(fam, x));
        // Traces are prefixes of one order, so sorted by size they are nested.
        std::vector<std::vector<bool>> traces;
        for (const auto& s : fam.separators) traces.push_back(trace(s, x));
        std::sort(traces.begin(), traces.end(), [](const auto& a, const auto& b) {
            return std::count(a.begin(), a.end(), true) < std::count(b.begin(), b.end(), true);
        });
        for (std::size_t t = 1; t < traces.size(); ++t)
            for (std::size_t i = 0; i < x.size(); ++i)
                if (traces[t - 1][i]) CHECK(traces[t][i]);
        std::size_t count = 0;
        for (bool b : traces.empty() ? std::vector<bool>{} : traces[0]) count += b;
        if (!traces.empty()) CHECK(count == 1);
    }
    CHECK(prefix_halfplanes({{Rational(3), Rational(4)}}).size() == 0);
    CHECK_THROWS_AS(prefix_halfplanes({}), precondition_error);
    PointSet dup = {{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
    CHECK_THROWS_AS(prefix_halfplanes(dup), precondition_error);
}

TEST_CASE("halfplane_separate sizes and split invariants") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        PointSet x = random_general_position(3 + seed, seed);  // n = 4..9, odd and even
        SplitRun run = halfplane_separate_run(x);
        CHECK(run.family.size() == ceil_half(x.size()));
        CHECK(is_separating(run.family, x));
        REQUIRE(!run.states.empty());
        for (std::size_t j = 0; j < run.states.size(); ++j) {
            const SplitState& st = run.states[j];
            CHECK(st.step == j);
            CHECK(st.q.size() == st.r.size());
            CHECK(st.q.size() == run.states[0].q.size() - j);
            for (std::size_t i : st.q) CHECK(contains(st.boundary, x[i]));
            for (std::size_t i : st.r) CHECK(!contains(st.boundary, x[i]));
        }
        CHECK(run.states.back().q.size() == 1);
    }
    CHECK(halfplane_separate(random_general_position(2, 9)).size() == 1);
    CHECK_THROWS_AS(halfplane_separate(collinear_points(4)), precondition_error);
    CHECK_THROWS_AS(halfplane_separate({{Rational(0), Rational(0)}}), precondition_error);
}

TEST_CASE("disc_separate handles degenerate position too") {
    for (const PointSet& x : {collinear_points(6), collinear_points(7), circle_points(9),
                              random_general_position(12, 5)}) {
        SplitRun run = disc_separate_run(x);
        CHECK(run.family.size() == ceil_half(x.size()));
        CHECK(is_separating(run.family, x));
        for (const Separator& s : run.family.separators)
            CHECK(std::holds_alternative<Disc>(s));
        for (const SplitState& st : run.states) CHECK(st.q.size() == st.r.size());
    }
    CHECK(disc_separate(collinear_points(2)).size() == 1);
    CHECK(disc_separate(collinear_points(3)).size() == 2);
}

TEST_CASE("binary_family traces are exactly the position bit classes") {
    PointSet x = circle_points(8);
    std::vector<std::size_t> q = {0, 1, 2, 3, 4, 5, 6, 7};
    auto bits = binary_family(x, q);
    REQUIRE(bits.size() == 3);
    for (std::size_t j = 0; j < bits.size(); ++j)
        for (std::size_t t = 0; t < q.size(); ++t)
            CHECK(contains(bits[j], x[q[t]]) == ((t >> j & 1) != 0));

    std::vector<std::size_t> sub = {2, 5, 7};
    auto sub_bits = binary_family(x, sub);
    REQUIRE(sub_bits.size() == 2);
    for (std::size_t j = 0; j < sub_bits.size(); ++j)
        for (std::size_t t = 0; t < sub.size(); ++t)
            CHECK(contains(sub_bits[j], x[sub[t]]) == ((t >> j & 1) != 0));

    CHECK(binary_family(x, {3}).empty());
    CHECK(binary_family(x, {3, 6}).size() == 1);
}

TEST_CASE("binary_family preconditions") {
    PointSet x = collinear_points(5);
    CHECK_THROWS_AS(binary_family(x, {}), precondition_error);
    CHECK_THROWS_AS(binary_family(x, {0, 0}), precondition_error);
    CHECK_THROWS_AS(binary_family(x, {0, 9}), precondition_error);
    CHECK_THROWS_AS(binary_family(x, {0, 1, 2}), precondition_error);  // collinear
}

TEST_CASE("largest_convex_subset agrees with brute force") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        PointSet x = random_general_position(3 + seed, seed * 17);
        auto got = largest_convex_subset(x);
        CHECK(got.size() == brute_max_convex(x));
        CHECK(std::is_sorted(got.begin(), got.end()));
        CHECK(in_convex_position(x, got));
    }
    CHECK(largest_convex_subset(circle_points(9)).size() == 9);
    CHECK(largest_convex_subset(erdos_szekeres_set(5)).size() == 4);
    CHECK(largest_convex_subset(erdos_szekeres_set(6)).size() == 5);
}

TEST_CASE("largest_convex_subset parallel, serial and big-number paths agree") {
    PointSet x = random_general_position(40, 11);
    auto a = largest_convex_subset(x);
    auto b = largest_convex_subset_serial(x);
    CHECK(a == b);

    // Scaling by a positive rational keeps convex position; huge denominators
    // force the arbitrary-precision path.
    Rational f = make_rational(1, 1000000007);
    f = f * f * f;  // ~1/10^27, far past the 64-bit window
    PointSet scaled;
    for (const Point& p : x) scaled.push_back({p.x * f, p.y * f});
    CHECK(largest_convex_subset(scaled) == a);
}

TEST_CASE("largest_convex_subset edge cases") {
    CHECK_THROWS_AS(largest_convex_subset({}), precondition_error);
    PointSet one = {{Rational(2), Rational(2)}};
    CHECK(largest_convex_subset(one) == std::vector<std::size_t>{0});
    PointSet two = collinear_points(2);
    CHECK(largest_convex_subset(two) == std::vector<std::size_t>{0, 1});
    CHECK_THROWS_AS(largest_convex_subset(collinear_points(3)), precondition_error);
}

TEST_CASE("largest_convex_subset is deterministic") {
    PointSet x = random_general_position(25, 23);
    auto a = largest_convex_subset(x);
    auto b = largest_convex_subset(x);
    CHECK(a == b);
}

TEST_CASE("convex_separate on small sets delegates to discs") {
    PointSet x = random_general_position(10, 4);
    SeparatingFamily fam = convex_separate(x);
    CHECK(fam.size() == 5);
    CHECK(is_separating(fam, x));
    CHECK(fam.provenance.find("disc_separate") != std::string::npos);
}

TEST_CASE("convex_separate rounds record their extraction") {
    PointSet x = random_general_position(40, 8);
    ConvexRun run = convex_separate_run(x);
    CHECK(is_separating(run.family, x));
    REQUIRE(!run.steps.empty());
    std::set<std::size_t> taken;
    for (const ConvexStepRecord& rec : run.steps) {
        CHECK(!rec.qi.empty());
        CHECK(rec.removed == rec.qi);
        CHECK(in_convex_position(x, rec.qi));
        std::size_t bits_needed = 0;
        while ((std::size_t(1) << bits_needed) < rec.qi.size()) ++bits_needed;
        CHECK(rec.bits.size() == bits_needed);
        for (std::size_t i : rec.qi) {
            CHECK(contains(rec.hull, x[i]));
            CHECK(taken.insert(i).second);  // never extracted twice
        }
        if (rec.inner) {
            // the inner hull is inside the outer one and excludes the chosen points
            for (const Point& v : rec.inner->vertices) CHECK(contains(rec.hull, v));
            for (std::size_t i : rec.qi) CHECK(!contains(*rec.inner, x[i]));
        }
    }
}

TEST_CASE("convex_separate stays within its size bound") {
    for (std::size_t n : {30, 120}) {
        PointSet x = random_general_position(n, n);
        SeparatingFamily fam = convex_separate(x);
        CHECK(is_separating(fam, x));
        const double nn = static_cast<double>(n);
        const double bound = 20.0 * nn * std::log2(std::log2(nn)) / std::log2(nn);
        CHECK(static_cast<double>(fam.size()) <= bound);
    }
    CHECK_THROWS_AS(convex_separate(collinear_points(5)), precondition_error);
}

TEST_CASE("prune_to_minimal drops redundancy and keeps separation") {
    PointSet x = collinear_points(6);
    SeparatingFamily fam = prefix_halfplanes(x);
    const std::size_t base = fam.size();
    // Pad with duplicates and a separator that splits nothing.
    SeparatingFamily padded = fam;
    padded.separators.push_back(fam.separators[0]);
    padded.separators.push_back(fam.separators[2]);
    padded.separators.push_back(Disc{{Rational(2), Rational(0)}, Rational(1000)});

    SeparatingFamily pruned = prune_to_minimal(padded, x);
    CHECK(is_separating(pruned, x));
    CHECK(pruned.size() <= x.size() - 1);
    CHECK(pruned.size() <= base);
    CHECK(pruned.provenance.find("| pruned") != std::string::npos);

    // Minimality: removing any single member breaks separation.
    for (std::size_t s = 0; s < pruned.size(); ++s) {
        SeparatingFamily sub = pruned;
        sub.separators.erase(sub.separators.begin() + static_cast<std::ptrdiff_t>(s));
        CHECK(!is_separating(sub, x));
    }
}

TEST_CASE("prune_to_minimal wants a separating input") {
    PointSet x = collinear_points(3);
    SeparatingFamily fam;  // empty: nothing separates (0, 1)
    CHECK_THROWS_AS(prune_to_minimal(fam, x), precondition_error);
}

TEST_CASE("builders are deterministic") {
    PointSet x = random_general_position(14, 99);
    CHECK(serialize_family(halfplane_separate(x)) == serialize_family(halfplane_separate(x)));
    CHECK(serialize_family(disc_separate(x)) == serialize_family(disc_separate(x)));
    CHECK(serialize_family(convex_separate(x)) == serialize_family(convex_separate(x)));
    CHECK(serialize_family(prefix_halfplanes(x)) == serialize_family(prefix_halfplanes(x)));
}
