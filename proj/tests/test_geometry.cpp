#include <doctest.h>

#include "mpdmp/geometry.hpp"
#include "mpdmp/rng.hpp"

#include <cmath>

using namespace mpdmp;
using namespace mpdmp::geom;

namespace {

bool near(Point2 a, Point2 b, double tol = 1e-9) {
    return distance(a, b) <= tol;
}

bool region_has(const ConvexRegion& r, Point2 p, double tol = 1e-9) {
    for (const auto& v : r) {
        if (near(v, p, tol)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("convex hull degeneracies") {
    CHECK(convex_hull({{1, 1}, {1, 1}, {1, 1}}).size() == 1);
    CHECK(convex_hull({{0, 0}, {2, 2}, {1, 1}}).size() == 2);
    auto square = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}});
    CHECK(square.size() == 4);
    CHECK(polygon_area(square) == doctest::Approx(1.0));
    CHECK(polygon_area(square) > 0);  // CCW
}

TEST_CASE("segment-segment intersection") {
    // crossing
    auto cross = intersect({{-2, -2}, {2, 2}}, {{-2, 2}, {2, -2}});
    REQUIRE(cross.size() == 1);
    CHECK(near(cross[0], {0, 0}));
    // collinear overlap
    auto overlap = intersect({{0, 0}, {4, 0}}, {{2, 0}, {6, 0}});
    REQUIRE(overlap.size() == 2);
    CHECK(region_has(overlap, {2, 0}));
    CHECK(region_has(overlap, {4, 0}));
    // disjoint parallel
    CHECK(intersect({{0, 0}, {4, 0}}, {{0, 1}, {4, 1}}).empty());
}

TEST_CASE("segment clipped by polygon") {
    ConvexRegion triangle = convex_hull({{-2, 0}, {2, 0}, {0, 4}});
    auto clipped = intersect({{-2, 1}, {2, 1}}, triangle);
    REQUIRE(clipped.size() == 2);
    CHECK(region_has(clipped, {-1.5, 1}));
    CHECK(region_has(clipped, {1.5, 1}));
}

TEST_CASE("polygon-polygon intersection collapses degeneracies") {
    ConvexRegion lower = convex_hull({{0, 0}, {4, 0}, {4, 2}, {0, 2}});
    ConvexRegion upper = convex_hull({{0, 2}, {4, 2}, {4, 4}, {0, 4}});
    auto shared_edge = intersect(lower, upper);
    REQUIRE(shared_edge.size() == 2);
    CHECK(region_has(shared_edge, {0, 2}));
    CHECK(region_has(shared_edge, {4, 2}));

    ConvexRegion a = convex_hull({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    ConvexRegion b = convex_hull({{2, 2}, {6, 2}, {6, 6}, {2, 6}});
    auto square = intersect(a, b);
    REQUIRE(square.size() == 4);
    CHECK(polygon_area(square) == doctest::Approx(4.0));
}

TEST_CASE("containment and distance") {
    ConvexRegion square = convex_hull({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    CHECK(contains(square, {1, 1}));
    CHECK(contains(square, {0, 0}));
    CHECK(!contains(square, {3, 1}));
    CHECK(distance_to_region(square, {1, 1}) == 0.0);
    CHECK(distance_to_region(square, {3, 1}) == doctest::Approx(1.0));
    CHECK(distance_to_region({{0, 0}, {4, 0}}, {2, 3}) == doctest::Approx(3.0));
}

TEST_CASE("random hulls contain their inputs") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Point2> pts;
        std::size_t n = 3 + rng.index(10);
        for (std::size_t i = 0; i < n; ++i) {
            pts.push_back({rng.uniform(-5, 5), rng.uniform(-5, 5)});
        }
        ConvexRegion hull = convex_hull(pts);
        for (const auto& p : pts) CHECK(contains(hull, p, 1e-7));
    }
}
