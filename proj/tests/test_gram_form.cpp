#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sqav/gram_form.hpp"

using namespace sqav;

TEST_CASE("form validation names the failing condition") {
    CHECK_THROWS_WITH_AS(GramForm(GramForm::Matrix{{2, 1}, {0, 2}}), doctest::Contains("not symmetric at (0,1)"),
                         InvalidForm);
    CHECK_THROWS_WITH_AS(GramForm(GramForm::Matrix{{1, 2}, {2, 1}}), doctest::Contains("minor of order 2 is -3"),
                         InvalidForm);
    CHECK_THROWS_WITH_AS(GramForm(GramForm::Matrix{{0}}), doctest::Contains("minor of order 1 is 0"), InvalidForm);
    CHECK_THROWS_AS(GramForm(GramForm::Matrix{}), InvalidForm);
    CHECK_THROWS_AS(GramForm(GramForm::Matrix{{1, 0}, {0, 1}}, {1}), InvalidForm);
}

TEST_CASE("LDL factors reproduce the form") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        auto b = oracle::random_form(3, rng);
        GramForm f(b);
        const auto& l = f.ldl_lower();
        const auto& d = f.ldl_diagonal();
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                Rational s = 0;
                for (std::size_t k = 0; k < 3; ++k) s += l[i][k] * d[k] * l[j][k];
                CHECK(s == b[i][j]);
            }
    }
}

TEST_CASE("affine height, scaling and change of basis") {
    GramForm f(GramForm::Matrix{{2}});
    CHECK(f.affine_height({3}) == 9);
    CHECK(f.affine_height({0}) == 0);
    GramForm g({{1, 0}, {0, 1}}, {1, 0});
    CHECK(g.affine_height({1, 0}) == 1);
    CHECK(g.affine_height({-1, 0}) == 0);
    CHECK(g.scaled(2).gram() == GramForm::Matrix{{2, 0}, {0, 2}});
    CHECK(g.scaled(2).linear() == IntVec{2, 0});
    auto h = GramForm({{2, -1}, {-1, 2}}).transformed({{1, 1}, {0, 1}});
    // U^T B U with U = [[1,1],[0,1]]
    CHECK(h.gram() == GramForm::Matrix{{2, 1}, {1, 2}});
}

TEST_CASE("ellipsoid enumeration matches a box search") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> num(-7, 7);
    for (std::size_t r = 1; r <= 3; ++r)
        for (int trial = 0; trial < 8; ++trial) {
            auto b = oracle::random_form(r, rng);
            GramForm f(b);
            RatVec c(r);
            for (auto& q : c) q = Rational(num(rng), 4);
            Rational radius = Rational(5 + trial, 2);
            // Radius 6 in B >= I keeps every point inside |x_i - c_i| <= 3.
            CHECK(enumerate_ellipsoid(f, c, radius) == oracle::ball(b, c, radius, 6));
        }
}

TEST_CASE("A2 minimal vectors") {
    GramForm f({{2, -1}, {-1, 2}});
    auto pts = enumerate_ellipsoid(f, {0, 0}, 2);
    CHECK(pts.size() == 7);  // origin and six roots
}

TEST_CASE("nearest points match a box search") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> num(-12, 12);
    for (std::size_t r = 1; r <= 3; ++r)
        for (int trial = 0; trial < 10; ++trial) {
            auto b = oracle::random_form(r, rng);
            GramForm f(b);
            RatVec c(r);
            for (auto& q : c) q = Rational(num(rng), 6);
            auto got = nearest_points(f, c);
            auto want = oracle::nearest(b, c, 6);
            CHECK(got.distance_sq == want.first);
            CHECK(got.points == want.second);
        }
}

TEST_CASE("nearest points at a square hole") {
    GramForm f({{1, 0}, {0, 1}});
    auto n = nearest_points(f, {Rational(1, 2), Rational(1, 2)});
    CHECK(n.distance_sq == Rational(1, 2));
    CHECK(n.points.size() == 4);
}
