#include "doctest.h"
#include "sepfam/separators.hpp"

using namespace sepfam;

namespace {

Point pt(long x, long y) { return {make_rational(x), make_rational(y)}; }

}  // namespace

TEST_CASE("halfplane membership is closed") {
    Halfplane h{make_rational(1), make_rational(0), make_rational(1)};  // x <= 1
    CHECK(contains(h, pt(0, 5)));
    CHECK(contains(h, pt(1, -3)));
    CHECK(!contains(h, pt(2, 0)));
    CHECK(!contains(h, {make_rational(1) + make_rational(1, 1000000), Rational(0)}));
}

TEST_CASE("disc membership is closed") {
    Disc d{pt(0, 0), make_rational(25)};
    CHECK(contains(d, pt(3, 4)));
    CHECK(contains(d, pt(0, 0)));
    CHECK(!contains(d, pt(5, 1)));
}

TEST_CASE("polygon membership covers vertices, edges and interior") {
    ConvexPolygon tri{{pt(0, 0), pt(4, 0), pt(0, 4)}};
    CHECK(contains(tri, pt(0, 0)));
    CHECK(contains(tri, pt(2, 0)));
    CHECK(contains(tri, pt(1, 1)));
    CHECK(contains(tri, pt(2, 2)));
    CHECK(!contains(tri, pt(3, 2)));
    CHECK(!contains(tri, pt(-1, 0)));
}

TEST_CASE("degenerate polygons") {
    ConvexPolygon single{{pt(2, 3)}};
    CHECK(contains(single, pt(2, 3)));
    CHECK(!contains(single, pt(2, 4)));

    ConvexPolygon seg{{pt(0, 0), pt(4, 0)}};
    CHECK(contains(seg, pt(0, 0)));
    CHECK(contains(seg, pt(4, 0)));
    CHECK(contains(seg, pt(2, 0)));
    CHECK(!contains(seg, pt(5, 0)));   // collinear but beyond the end
    CHECK(!contains(seg, pt(-1, 0)));
    CHECK(!contains(seg, pt(2, 1)));

    ConvexPolygon empty;
    CHECK_THROWS_AS(contains(empty, pt(0, 0)), precondition_error);
}

TEST_CASE("validate_separator rejects broken shapes") {
    CHECK_THROWS_AS(validate_separator(Halfplane{Rational(0), Rational(0), Rational(1)}),
                    precondition_error);
    CHECK_NOTHROW(validate_separator(Halfplane{Rational(1), Rational(0), Rational(0)}));

    CHECK_THROWS_AS(validate_separator(Disc{pt(0, 0), Rational(0)}), precondition_error);
    CHECK_THROWS_AS(validate_separator(Disc{pt(0, 0), Rational(-1)}), precondition_error);
    CHECK_NOTHROW(validate_separator(Disc{pt(0, 0), make_rational(1, 4)}));

    CHECK_THROWS_AS(validate_separator(ConvexPolygon{}), precondition_error);
    CHECK_THROWS_AS(validate_separator(ConvexPolygon{{pt(0, 0), pt(0, 0)}}), precondition_error);
    // Collinear vertices are not strictly convex.
    CHECK_THROWS_AS(validate_separator(ConvexPolygon{{pt(0, 0), pt(1, 0), pt(2, 0)}}),
                    precondition_error);
    // Clockwise order.
    CHECK_THROWS_AS(validate_separator(ConvexPolygon{{pt(0, 0), pt(0, 4), pt(4, 0)}}),
                    precondition_error);
    // Convex but listed out of cyclic order.
    CHECK_THROWS_AS(
        validate_separator(ConvexPolygon{{pt(0, 0), pt(4, 4), pt(4, 0), pt(0, 4)}}),
        precondition_error);
    CHECK_NOTHROW(validate_separator(ConvexPolygon{{pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)}}));
    CHECK_NOTHROW(validate_separator(ConvexPolygon{{pt(0, 0)}}));
    CHECK_NOTHROW(validate_separator(ConvexPolygon{{pt(0, 0), pt(1, 2)}}));
}

TEST_CASE("separates demands distinct points") {
    Halfplane h{make_rational(1), make_rational(0), make_rational(1)};
    CHECK(separates(Separator{h}, pt(0, 0), pt(2, 0)));
    CHECK(!separates(Separator{h}, pt(0, 0), pt(1, 0)));
    CHECK_THROWS_AS(separates(Separator{h}, pt(0, 0), pt(0, 0)), precondition_error);
}

TEST_CASE("trace matches membership pointwise") {
    PointSet x = {pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0)};
    Separator s = Disc{pt(1, 0), make_rational(3, 2)};
    auto t = trace(s, x);
    REQUIRE(t.size() == 4);
    CHECK(t[0]);
    CHECK(t[1]);
    CHECK(t[2]);
    CHECK(!t[3]);
}

TEST_CASE("unseparated_pair picks the lexicographically first pair") {
    PointSet x = {pt(0, 0), pt(1, 0), pt(2, 0)};
    SeparatingFamily empty;
    auto bad = unseparated_pair(empty, x);
    REQUIRE(bad.has_value());
    CHECK(bad->first == 0);
    CHECK(bad->second == 1);

    // One halfplane isolating point 0 leaves (1, 2) as the first bad pair.
    SeparatingFamily one;
    one.separators.push_back(Halfplane{make_rational(1), Rational(0), make_rational(1, 2)});
    bad = unseparated_pair(one, x);
    REQUIRE(bad.has_value());
    CHECK(bad->first == 1);
    CHECK(bad->second == 2);

    SeparatingFamily two = one;
    two.separators.push_back(Halfplane{make_rational(1), Rational(0), make_rational(3, 2)});
    CHECK(!unseparated_pair(two, x).has_value());
    CHECK(is_separating(two, x));
}

TEST_CASE("tiny point sets are vacuously separated") {
    SeparatingFamily empty;
    CHECK(is_separating(empty, {}));
    CHECK(is_separating(empty, {pt(3, 3)}));
    CHECK(!is_separating(empty, {pt(0, 0), pt(1, 1)}));
}

TEST_CASE("signature_table rows are distinct exactly for separating families") {
    PointSet x = {pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0)};
    SeparatingFamily fam;
    fam.separators.push_back(Halfplane{make_rational(1), Rational(0), make_rational(1, 2)});
    fam.separators.push_back(Halfplane{make_rational(1), Rational(0), make_rational(3, 2)});
    auto rows = signature_table(fam, x);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<bool>{true, true});
    CHECK(rows[1] == std::vector<bool>{false, true});
    CHECK(rows[2] == std::vector<bool>{false, false});
    CHECK(rows[3] == std::vector<bool>{false, false});
    CHECK(!is_separating(fam, x));

    fam.separators.push_back(Halfplane{make_rational(1), Rational(0), make_rational(5, 2)});
    rows = signature_table(fam, x);
    CHECK(is_separating(fam, x));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) CHECK(rows[i] != rows[j]);
}
