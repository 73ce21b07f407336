#include <doctest.h>

#include "core/raster.hpp"
#include "support/oracle.hpp"
#include "support/testutil.hpp"

using namespace edgecurrent;

TEST_CASE("grid spec from the sample pair") {
    Polygon p1 = testutil::to_polygon(testutil::sample_p1());
    Polygon p2 = testutil::to_polygon(testutil::sample_p2());
    GridSpec g = build_grid_spec(p1, p2, 5);
    CHECK(g.rows == 55);
    CHECK(g.cols == 60);
    CHECK(g.margin == 5);
}

TEST_CASE("grid spec of two unit squares") {
    Polygon sq = testutil::rectangle_polygon(1, 1, 2, 2);
    GridSpec g = build_grid_spec(sq, sq, 5);
    CHECK(g.rows == 7);
    CHECK(g.cols == 7);
}

TEST_CASE("grid spec ceils fractional extents") {
    Polygon a = Polygon::from_vertices({{13.7, 9.2}, {1, 9.2}, {1, 1}, {13.7, 1}});
    Polygon b = Polygon::from_vertices({{8, 21}, {1, 21}, {1, 1}, {8, 1}});
    GridSpec g = build_grid_spec(a, b, 3);
    CHECK(g.rows == 17);
    CHECK(g.cols == 24);
}

TEST_CASE("grid spec rejects a negative margin") {
    Polygon sq = testutil::rectangle_polygon(1, 1, 2, 2);
    CHECK_THROWS_AS(build_grid_spec(sq, sq, -1), error);
}

TEST_CASE("grid spec for curves") {
    CurveSet set;
    set.add({{{5, 2}, {5, 9.5}}, false});
    GridSpec g = build_grid_spec_for_curves(set, CurveSet{}, 3);
    CHECK(g.rows == 8);
    CHECK(g.cols == 13);
    CHECK_THROWS_AS(build_grid_spec_for_curves(CurveSet{}, CurveSet{}, 3),
                    error);
}

TEST_CASE("polygon validation") {
    SUBCASE("fewer than three vertices") {
        CHECK_THROWS_AS(Polygon::from_vertices({{1, 1}, {2, 2}}), error);
    }
    SUBCASE("nonpositive coordinate") {
        CHECK_THROWS_AS(Polygon::from_vertices({{0, 1}, {2, 1}, {2, 2}}),
                        error);
        CHECK_THROWS_AS(Polygon::from_vertices({{1, -3}, {2, 1}, {2, 2}}),
                        error);
    }
    SUBCASE("self-intersection is rejected") {
        // bowtie
        CHECK_THROWS_AS(
            Polygon::from_vertices({{1, 1}, {4, 4}, {4, 1}, {1, 4}}), error);
    }
    SUBCASE("collinear fold is rejected") {
        CHECK_THROWS_AS(
            Polygon::from_vertices({{1, 1}, {3, 1}, {2, 1}}), error);
    }
    SUBCASE("duplicate closing vertex is dropped") {
        Polygon p = testutil::to_polygon(testutil::sample_p1());
        CHECK(p.size() == 11);
    }
}

TEST_CASE("rasterized square covers exactly its lattice points") {
    Polygon sq = testutil::rectangle_polygon(2, 2, 5, 5);
    GridSpec g{10, 10, 5};
    BitGrid m = rasterize(sq, g);
    CHECK(m.ones() == 16);
    for (int i = 1; i <= 10; ++i)
        for (int j = 1; j <= 10; ++j) {
            bool expect = i >= 2 && i <= 5 && j >= 2 && j <= 5;
            CHECK(m.at(i - 1, j - 1) == (expect ? 1 : 0));
        }
    CHECK_FALSE(m.empty_warning);
}

TEST_CASE("sample slit rasterizes to a single column") {
    Polygon p1 = testutil::to_polygon(testutil::sample_p1());
    GridSpec g = build_grid_spec(p1, p1, 5);
    BitGrid m = rasterize(p1, g);
    for (int j = 35; j <= 55; ++j)
        CHECK(m.at(28 - 1, j - 1) == 1);
    for (int j = 36; j <= 55; ++j) {
        CHECK(m.at(27 - 1, j - 1) == 0);
        CHECK(m.at(29 - 1, j - 1) == 0);
    }
}

TEST_CASE("small triangle agrees with the brute-force test") {
    Polygon tri = Polygon::from_vertices({{1, 1}, {1.4, 1}, {1.2, 1.4}});
    GridSpec g{6, 6, 3};
    BitGrid m = rasterize(tri, g);
    std::vector<oracle::Point> pts = testutil::to_points(tri);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK(static_cast<bool>(m.at(i - 1, j - 1)) ==
                  oracle::point_in_polygon(i, j, pts));
    // (1,1) is a vertex, hence on the boundary, hence occupied
    CHECK(m.at(0, 0) == 1);
    CHECK(m.ones() == 1);
}

TEST_CASE("polygon covering no lattice point sets the warning flag") {
    Polygon tiny =
        Polygon::from_vertices({{1.1, 1.1}, {1.3, 1.1}, {1.2, 1.3}});
    GridSpec g{6, 6, 3};
    BitGrid m = rasterize(tiny, g);
    CHECK(m.ones() == 0);
    CHECK(m.empty_warning);
}

TEST_CASE("polygon beyond the grid margin is rejected") {
    Polygon sq = testutil::rectangle_polygon(2, 2, 8, 8);
    CHECK_THROWS_AS(rasterize(sq, GridSpec{10, 10, 5}), error);
}

TEST_CASE("border cells stay empty under a conforming spec") {
    testutil::Rng rng(0x5eed0001);
    for (int trial = 0; trial < 10; ++trial) {
        Polygon p = testutil::random_polygon(rng);
        GridSpec g = build_grid_spec(p, p, 5);
        BitGrid m = rasterize(p, g);
        for (int i = 0; i < m.rows; ++i) {
            CHECK(m.at(i, 0) == 0);
            CHECK(m.at(i, m.cols - 1) == 0);
        }
        for (int j = 0; j < m.cols; ++j) {
            CHECK(m.at(0, j) == 0);
            CHECK(m.at(m.rows - 1, j) == 0);
        }
    }
}

TEST_CASE("rasterization is translation-equivariant for integer shifts") {
    testutil::Rng rng(0x5eed0002);
    for (int trial = 0; trial < 8; ++trial) {
        Polygon p = testutil::random_polygon(rng);
        int dx = rng.uniform_int(0, 6);
        int dy = rng.uniform_int(0, 6);
        GridSpec g = build_grid_spec(p, p, 5);
        GridSpec shifted{g.rows + dx, g.cols + dy, g.margin};
        BitGrid base = rasterize(p, g);
        BitGrid moved = rasterize(p.translated(dx, dy), shifted);
        for (int i = 0; i < g.rows; ++i)
            for (int j = 0; j < g.cols; ++j)
                CHECK(base.at(i, j) == moved.at(i + dx, j + dy));
    }
}

TEST_CASE("occupancy count stays within the perimeter bound") {
    testutil::Rng rng(0x5eed0003);
    for (int trial = 0; trial < 25; ++trial) {
        double r1 = rng.uniform(1.0, 12.0);
        double c1 = rng.uniform(1.0, 12.0);
        double r2 = r1 + rng.uniform(0.5, 18.0);
        double c2 = c1 + rng.uniform(0.5, 18.0);
        Polygon rect = testutil::rectangle_polygon(r1, c1, r2, c2);
        GridSpec g = build_grid_spec(rect, rect, 5);
        BitGrid m = rasterize(rect, g);
        double area = (r2 - r1) * (c2 - c1);
        double perimeter = 2.0 * ((r2 - r1) + (c2 - c1));
        CHECK(std::abs(static_cast<double>(m.ones()) - area) <=
              perimeter + 4.0);
        // cross-check the grid against the independent rasterizer
        oracle::Matrix om =
            oracle::rasterize(testutil::to_points(rect), g.rows, g.cols);
        long mismatches = 0;
        for (int i = 0; i < g.rows; ++i)
            for (int j = 0; j < g.cols; ++j)
                mismatches += (om[i][j] != 0.0) != (m.at(i, j) != 0);
        CHECK(mismatches == 0);
    }
}

TEST_CASE("rasterization ignores vertex-list rotation and reversal") {
    testutil::Rng rng(0x5eed0004);
    for (int trial = 0; trial < 8; ++trial) {
        Polygon p = testutil::random_polygon(rng);
        GridSpec g = build_grid_spec(p, p, 5);
        BitGrid base = rasterize(p, g);

        std::vector<Vec2> verts = p.vertices();
        size_t start = static_cast<size_t>(rng.uniform_int(
            1, static_cast<int>(verts.size()) - 1));
        std::vector<Vec2> rotated(verts.begin() + start, verts.end());
        rotated.insert(rotated.end(), verts.begin(), verts.begin() + start);
        BitGrid rot = rasterize(Polygon::from_vertices(rotated), g);
        CHECK(rot.cells == base.cells);

        std::vector<Vec2> reversed(verts.rbegin(), verts.rend());
        BitGrid rev = rasterize(Polygon::from_vertices(reversed), g);
        CHECK(rev.cells == base.cells);
    }
}
