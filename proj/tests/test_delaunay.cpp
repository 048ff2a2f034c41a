#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sqav/delaunay.hpp"

using namespace sqav;

namespace {

const GramForm::Matrix I1{{2}};
const GramForm::Matrix I2{{1, 0}, {0, 1}};
const GramForm::Matrix A2{{2, -1}, {-1, 2}};
const GramForm::Matrix A3{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
const GramForm::Matrix I3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
const GramForm::Matrix D4{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};

std::vector<long long> counts(const StarComplex& s) {
    std::vector<long long> out(s.rank() + 1, 0);
    for (const auto& c : s.cells()) ++out[c.dim];
    return out;
}

// Every star cell is the full nearest set of its centre, checked by box search.
void check_empty_spheres(const GramForm::Matrix& b, const StarComplex& s, long long box) {
    for (const auto& c : s.cells()) {
        auto want = oracle::nearest(b, c.hole, box);
        CHECK(want.first == c.radius_sq);
        CHECK(want.second == c.vertices);
    }
}

}  // namespace

TEST_CASE("star face counts") {
    CHECK(counts(star(GramForm(I1))) == std::vector<long long>{1, 2});
    CHECK(counts(star(GramForm(I2))) == std::vector<long long>{1, 4, 4});
    CHECK(counts(star(GramForm(A2))) == std::vector<long long>{1, 6, 6});
    CHECK(counts(star(GramForm(I3))) == std::vector<long long>{1, 6, 12, 8});
    // FCC: 12 neighbours, 8 tetrahedra and 6 octahedra at a vertex; edges of the
    // vertex link follow from Euler's relation V - E + F = 2 on the sphere.
    auto a3 = counts(star(GramForm(A3)));
    CHECK(a3[1] == 12);
    CHECK(a3[3] == 14);
    CHECK(a3[1] - a3[2] + a3[3] == 2);
}

TEST_CASE("star cells have empty circumspheres") {
    check_empty_spheres(I2, star(GramForm(I2)), 4);
    check_empty_spheres(A2, star(GramForm(A2)), 4);
    check_empty_spheres(A3, star(GramForm(A3)), 3);
}

TEST_CASE("relevant vectors count Voronoi facets") {
    CHECK(relevant_vectors(GramForm(I2)).size() == 4);
    CHECK(relevant_vectors(GramForm(A2)).size() == 6);
    CHECK(relevant_vectors(GramForm(I3)).size() == 6);
    CHECK(relevant_vectors(GramForm(A3)).size() == 12);  // rhombic dodecahedron
    CHECK(relevant_vectors(GramForm(D4)).size() == 24);  // 24-cell
}

TEST_CASE("relevant vectors satisfy the coset criterion by box search") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        auto b = oracle::random_form(2, rng);
        std::set<IntVec> got;
        for (const auto& v : relevant_vectors(GramForm(b))) got.insert(v);
        std::set<IntVec> want;
        oracle::for_each_in_box(2, -4, 4, [&](const IntVec& v) {
            if (v == IntVec{0, 0}) return;
            // v is relevant iff +-v are the only minima of Q on v + 2X.
            long long best = oracle::qnorm(b, oracle::rat(v)).convert_to<long long>();
            int ties = 0;
            bool beaten = false;
            oracle::for_each_in_box(2, -4, 4, [&](const IntVec& y) {
                IntVec w{v[0] + 2 * y[0], v[1] + 2 * y[1]};
                long long q = oracle::qnorm(b, oracle::rat(w)).convert_to<long long>();
                if (q < best) beaten = true;
                if (q == best) ++ties;
            });
            if (!beaten && ties == 2) want.insert(v);
        });
        CHECK(got == want);
    }
}

TEST_CASE("holes of hand-computed cells") {
    auto h = hole_of(GramForm(I2), {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(h.center == RatVec{Rational(1, 2), Rational(1, 2)});
    CHECK(h.radius_sq == Rational(1, 2));
    // B alpha = (1, 0) on the A2 triangle 0, e1, e1 + e2.
    auto t = hole_of(GramForm(A2), {{0, 0}, {1, 0}, {1, 1}});
    CHECK(t.center == RatVec{Rational(2, 3), Rational(1, 3)});
    CHECK(t.radius_sq == Rational(2, 3));
    CHECK_THROWS_AS(hole_of(GramForm(I2), {{0, 0}, {1, 0}, {0, 2}, {2, 2}}), InvalidCell);
}

TEST_CASE("cells at given centres") {
    auto sq = delaunay_cell_at(GramForm(I2), {Rational(1, 2), Rational(1, 2)});
    CHECK(sq.dim == 2);
    CHECK(sq.vertices.size() == 4);
    auto edge = delaunay_cell_at(GramForm(I2), {Rational(1, 2), Rational(1, 5)});
    CHECK(edge.dim == 1);
    CHECK(edge.vertices == std::vector<IntVec>{{0, 0}, {1, 0}});
    auto vertex = delaunay_cell_at(GramForm(I2), {Rational(1, 5), Rational(1, 7)});
    CHECK(vertex.dim == 0);
}

TEST_CASE("both star constructions agree") {
    for (const auto& b : {I1, I2, A2, A3, I3}) {
        GramForm f(b);
        CHECK(star_via_voronoi(f).cells() == star_via_lifting(f).cells());
    }
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 6; ++trial) {
        GramForm f(oracle::random_form(trial < 3 ? 2 : 3, rng));
        CHECK(star_via_voronoi(f).cells() == star_via_lifting(f).cells());
    }
}

TEST_CASE("verified star passes its own checks") {
    StarOptions opts;
    opts.verify = true;
    CHECK_NOTHROW(star(GramForm(A3), opts));
    CHECK_NOTHROW(star(GramForm(D4), opts));
}

TEST_CASE("rank limit") {
    GramForm::Matrix id6(6, std::vector<long long>(6, 0));
    for (int i = 0; i < 6; ++i) id6[i][i] = 1;
    StarOptions opts;
    opts.rank_limit = 5;
    CHECK_THROWS_AS(star(GramForm(id6), opts), RankLimitExceeded);
}

TEST_CASE("walking reaches an empty-sphere maximal cell") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> num(0, 99);
    for (int trial = 0; trial < 10; ++trial) {
        auto b = trial % 2 ? A2 : oracle::random_form(2, rng);
        RatVec start{Rational(num(rng), 100), Rational(num(rng), 100)};
        auto cell = walk_to_maximal_cell(GramForm(b), start, trial);
        CHECK(cell.dim == 2);
        auto want = oracle::nearest(b, cell.hole, 5);
        CHECK(want.second == cell.vertices);
    }
    auto a3 = walk_to_maximal_cell(GramForm(A3), {Rational(1, 7), Rational(2, 9), Rational(3, 11)}, 1);
    CHECK(a3.dim == 3);
    CHECK((a3.vertices.size() == 4 || a3.vertices.size() == 6));
}

TEST_CASE("Voronoi cells are dual to star cells") {
    auto s = star(GramForm(I2));
    for (const auto& c : s.cells()) {
        auto v = voronoi_cell(s.form(), c, s);
        CHECK(v.dim + c.dim == 2);
        if (c.dim == 0) {
            CHECK(v.vertices.size() == 4);
            CHECK(v.halfspaces.size() == 4);
        }
        for (const auto& a : v.vertices)
            for (const auto& h : v.halfspaces) CHECK(s.form().inner(a, h.direction) <= h.bound);
    }
    DelaunayCell foreign;
    foreign.vertices = {{5, 5}};
    CHECK_THROWS_AS(voronoi_cell(s.form(), foreign, s), InvalidCell);
}

TEST_CASE("facets of translated cells") {
    auto s = star(GramForm(I2));
    auto f = s.facets_of({{3, 4}, {3, 5}, {4, 4}, {4, 5}});
    CHECK(f.size() == 4);
    auto e = s.facets_of({{3, 4}, {4, 4}});
    CHECK(e == std::vector<std::vector<IntVec>>{{{3, 4}}, {{4, 4}}});
}

TEST_CASE("locating points in cells agrees with LP membership") {
    for (const auto& b : {I2, A2}) {
        auto s = star(GramForm(b));
        for (long long i = 0; i < 6; ++i)
            for (long long j = 0; j < 6; ++j) {
                RatVec z{Rational(i, 6), Rational(j, 6)};
                auto cells = cells_containing(s, z);
                // Oracle: translates of star cells containing z, by LP.
                std::set<std::vector<IntVec>> want;
                oracle::for_each_in_box(2, -2, 2, [&](const IntVec& t) {
                    for (const auto& c : s.cells()) {
                        std::vector<IntVec> verts;
                        for (const auto& v : c.vertices) verts.push_back(add(v, t));
                        std::sort(verts.begin(), verts.end());
                        if (hull_membership(z, verts)) want.insert(verts);
                    }
                });
                CHECK(std::set<std::vector<IntVec>>(cells.begin(), cells.end()) == want);
                auto minimal = minimal_cell_containing(s, z);
                CHECK(std::find(cells.begin(), cells.end(), minimal) != cells.end());
                for (const auto& c : cells) CHECK(std::includes(c.begin(), c.end(), minimal.begin(), minimal.end()));
            }
    }
}

TEST_CASE("Hilbert bases of planar cones") {
    CHECK(primitive_vectors(Cone({{1, 0}, {1, 2}}, 2)) == std::vector<IntVec>{{1, 0}, {1, 1}, {1, 2}});
    CHECK(primitive_vectors(Cone({{1, 0}, {1, 3}}, 2)) == std::vector<IntVec>{{1, 0}, {1, 1}, {1, 2}, {1, 3}});
    CHECK(primitive_vectors(Cone({{1, 0}, {0, 1}}, 2)) == std::vector<IntVec>{{0, 1}, {1, 0}});
    // Cone over (2,1),(1,2): Hilbert basis (1,1),(1,2),(2,1).
    CHECK(primitive_vectors(Cone({{2, 1}, {1, 2}}, 2)) == std::vector<IntVec>{{1, 1}, {1, 2}, {2, 1}});
}

TEST_CASE("Hilbert basis agrees with an irreducibility search") {
    std::vector<IntVec> gens{{1, 0, 0}, {0, 1, 0}, {1, 1, 2}};
    auto got = primitive_vectors(Cone(gens, 3));
    std::vector<IntVec> pts;
    oracle::for_each_in_box(3, 0, 3, [&](const IntVec& x) {
        if (!is_zero(x) && cone_membership(x, gens)) pts.push_back(x);
    });
    std::set<IntVec> pset(pts.begin(), pts.end());
    std::vector<IntVec> want;
    for (const auto& w : pts) {
        bool reducible = false;
        for (const auto& u : pts)
            if (u != w && pset.count(sub(w, u))) reducible = true;
        if (!reducible) want.push_back(w);
    }
    std::sort(want.begin(), want.end());
    CHECK(got == want);
}

TEST_CASE("primitive vectors of star cones") {
    // The square star: every cone is unimodular, so Prim = {+-e1, +-e2}.
    CHECK(primitive_vectors(star(GramForm(I2))).size() == 4);
    CHECK(primitive_vectors(star(GramForm(A2))).size() == 6);
}

TEST_CASE("cellmates") {
    auto s = star(GramForm(I2));
    CHECK(cellmates(s, {{1, 0}, {0, 1}}));
    CHECK(cellmates(s, {{1, 0}, {2, 3}}));
    CHECK_FALSE(cellmates(s, {{1, 0}, {-1, 0}}));
    CHECK(cellmates(s, {{0, 0}, {-1, 0}}));
}

TEST_CASE("cell lattice data") {
    DelaunayCell tri;
    tri.vertices = {{0, 0}, {1, 0}, {1, 2}};
    tri.dim = 2;
    auto d = cell_lattice_data(tri);
    CHECK(d.index == 2);
    CHECK(d.nilpotency == 2);
    CHECK_FALSE(is_generating(tri));
    DelaunayCell seg;
    seg.vertices = {{1, 1}, {3, 3}};
    seg.dim = 1;
    CHECK(cell_lattice_data(seg).index == 2);  // anchored: (2,2) in the line lattice
    DelaunayCell sq;
    sq.vertices = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    sq.dim = 2;
    CHECK(is_generating(sq));
    CHECK(is_totally_generating(sq));
}

TEST_CASE("total generation is Hilbert basis containment") {
    for (const auto& b : {A3, I3}) {
        auto s = star(GramForm(b));
        for (const auto& c : s.cells()) {
            if (c.dim == 0) continue;
            auto dv = c.delaunay_vectors();
            auto hb = primitive_vectors(Cone(dv, s.rank()));
            bool contained = std::all_of(hb.begin(), hb.end(), [&](const IntVec& h) {
                return std::find(dv.begin(), dv.end(), h) != dv.end();
            });
            CHECK(is_totally_generating(c) == contained);
            CHECK(contained);
        }
        CHECK(nilpotency_of_decomposition(s) == 1);
    }
}

TEST_CASE("a generating but not totally generating cone is detected") {
    // (1,3), (2,5) form a basis, yet (1,1) lies in the cone and is no N-combination.
    DelaunayCell c;
    c.vertices = {{0, 0}, {1, 0}, {1, 3}, {2, 5}};
    c.dim = 2;
    CHECK(is_generating(c));
    CHECK_FALSE(is_totally_generating(c));
}
