#include <random>

#include "doctest.h"
#include "sepfam/constructions.hpp"
#include "sepfam/geometry.hpp"

using namespace sepfam;

namespace {

Point pt(long x, long y) { return {make_rational(x), make_rational(y)}; }

Point pt(long xn, long xd, long yn, long yd) { return {make_rational(xn, xd), make_rational(yn, yd)}; }

}  // namespace

TEST_CASE("orientation on small integer points") {
    CHECK(orientation_sign(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
    CHECK(orientation_sign(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
    CHECK(orientation_sign(pt(0, 0), pt(1, 1), pt(2, 2)) == 0);
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == Orientation::CounterClockwise);
    CHECK(orientation(pt(0, 0), pt(2, 0), pt(1, 0)) == Orientation::Collinear);
}

TEST_CASE("orientation beyond the fast coordinate range") {
    Rational big{BigInt(1) << 50};  // 2^50, past the int64 fast path
    Point a{Rational(0), Rational(0)};
    Point b{big, Rational(1)};
    Point c{2 * big, Rational(3)};
    // cross = 2^50 * 3 - 1 * 2^51 = 2^50 > 0
    CHECK(orientation_sign(a, b, c) == 1);
    CHECK(orientation_sign(a, c, b) == -1);

    Point d{big, big};
    Point e{2 * big, 2 * big};
    CHECK(orientation_sign(a, d, e) == 0);
}

TEST_CASE("orientation on fractional points") {
    CHECK(orientation_sign(pt(0, 0), pt(1, 3, 1, 3), pt(2, 3, 2, 3)) == 0);
    CHECK(orientation_sign(pt(0, 0), pt(1, 3, 1, 3), pt(2, 3, 1, 1)) == 1);
}

TEST_CASE("find_collinear_triple reports the lexicographically first triple") {
    PointSet x = {pt(0, 0), pt(5, 7), pt(1, 1), pt(9, 2), pt(2, 2)};
    auto t = find_collinear_triple(x);
    REQUIRE(t.has_value());
    CHECK(t->a == 0);
    CHECK(t->b == 2);
    CHECK(t->c == 4);
    CHECK(!is_general_position(x));
}

TEST_CASE("duplicate points count as collinear") {
    PointSet x = {pt(0, 0), pt(1, 1), pt(0, 0)};
    auto t = find_collinear_triple(x);
    REQUIRE(t.has_value());
    CHECK(t->a == 0);
    CHECK(t->b == 1);
    CHECK(t->c == 2);
}

TEST_CASE("general position on clean sets") {
    CHECK(is_general_position({pt(0, 0), pt(1, 0), pt(0, 1), pt(2, 3)}));
    CHECK(is_general_position({}));
    CHECK(is_general_position({pt(4, 4)}));
    CHECK(!is_general_position(collinear_points(3)));
}

TEST_CASE("convex hull drops interior and edge points") {
    PointSet x = {pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2), pt(1, 0), pt(1, 1)};
    auto h = convex_hull(x);
    REQUIRE(h.size() == 4);
    CHECK(h[0] == 0);
    CHECK(h[1] == 1);
    CHECK(h[2] == 2);
    CHECK(h[3] == 3);
}

TEST_CASE("convex hull counterclockwise from the lexicographic minimum") {
    PointSet x = {pt(3, 1), pt(0, 0), pt(1, 4)};
    auto h = convex_hull(x);
    REQUIRE(h.size() == 3);
    CHECK(h[0] == 1);
    CHECK(h[1] == 0);
    CHECK(h[2] == 2);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(orientation_sign(x[h[i]], x[h[(i + 1) % 3]], x[h[(i + 2) % 3]]) == 1);
}

TEST_CASE("convex hull tiny inputs and duplicates") {
    CHECK(convex_hull({}).empty());
    CHECK(convex_hull({pt(5, 5)}) == std::vector<std::size_t>{0});
    CHECK(convex_hull({pt(0, 0), pt(1, 0)}) == std::vector<std::size_t>{0, 1});
    CHECK(convex_hull({pt(0, 0), pt(0, 0), pt(1, 0)}) == std::vector<std::size_t>{0, 2});
    // Collinear input: the two extremes survive.
    auto h = convex_hull(collinear_points(5));
    REQUIRE(h.size() == 2);
    CHECK(h[0] == 0);
    CHECK(h[1] == 4);
}

TEST_CASE("generic_direction gives pairwise distinct projections both ways") {
    auto check_distinct = [](const PointSet& x) {
        Direction d = generic_direction(x);
        Direction perp{-d.dy, d.dx};
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = i + 1; j < x.size(); ++j) {
                CHECK(project(d, x[i]) != project(d, x[j]));
                CHECK(project(perp, x[i]) != project(perp, x[j]));
            }
    };
    check_distinct(collinear_points(6));
    check_distinct(circle_points(7));
    PointSet grid;
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j) grid.push_back(pt(i, j));
    check_distinct(grid);
}

TEST_CASE("generic_direction needs two points") {
    CHECK_THROWS_AS(generic_direction({pt(0, 0)}), precondition_error);
}

TEST_CASE("clearance on known configurations") {
    CHECK(clearance({pt(0, 0), pt(1, 0)}) == make_rational(1, 3));
    // Unit right triangle: the triple term |det| / (2s + 8) = 1/12 wins.
    CHECK(clearance({pt(0, 0), pt(1, 0), pt(0, 1)}) == make_rational(1, 12));
    // Far-apart pair: capped at 1/2.
    CHECK(clearance({pt(0, 0), pt(100, 0)}) == make_rational(1, 2));
}

TEST_CASE("clearance preconditions") {
    CHECK_THROWS_AS(clearance({pt(0, 0)}), precondition_error);
    CHECK_THROWS_AS(clearance({pt(0, 0), pt(0, 0)}), precondition_error);
    CHECK_THROWS_AS(clearance({pt(0, 0), pt(1, 1), pt(0, 0)}), precondition_error);
}

TEST_CASE("clearance matches its serial reference") {
    for (std::uint64_t seed : {1, 2, 3}) {
        PointSet x = random_general_position(30, seed);
        CHECK(clearance(x) == clearance_serial(x));
    }
    CHECK(clearance(circle_points(12)) == clearance_serial(circle_points(12)));
}

TEST_CASE("simultaneous displacement within clearance keeps every orientation") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        PointSet x = random_general_position(8, 100 + trial, 1u << 10);
        Rational cl = clearance(x);
        CHECK(cl > 0);
        CHECK(cl <= make_rational(1, 2));

        PointSet moved = x;
        for (Point& p : moved) {
            // Random rational offsets with L-infinity norm <= cl.
            long nx = static_cast<long>(rng() % 2001) - 1000;
            long ny = static_cast<long>(rng() % 2001) - 1000;
            p.x += cl * make_rational(nx, 1000);
            p.y += cl * make_rational(ny, 1000);
        }
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = i + 1; j < x.size(); ++j) {
                CHECK(moved[i] != moved[j]);
                for (std::size_t k = j + 1; k < x.size(); ++k)
                    CHECK(orientation_sign(x[i], x[j], x[k]) ==
                          orientation_sign(moved[i], moved[j], moved[k]));
            }
    }
}

TEST_CASE("fraction helpers") {
    CHECK(make_rational(4, 6) == make_rational(2, 3));
    CHECK_THROWS_AS(make_rational(1, 0), precondition_error);
    CHECK(sign(make_rational(-3, 7)) == -1);
    CHECK(abs_rational(make_rational(-3, 7)) == make_rational(3, 7));
    CHECK(project(Direction{make_rational(2), make_rational(1)}, pt(3, 4)) == 10);
}
