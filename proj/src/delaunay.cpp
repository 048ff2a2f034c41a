#include "sqav/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>

namespace sqav {

// ---- DelaunayCell ------------------------------------------------------------------

bool DelaunayCell::contains_vertex(const IntVec& x) const {
    return std::binary_search(vertices.begin(), vertices.end(), x);
}

std::vector<IntVec> DelaunayCell::delaunay_vectors() const {
    std::vector<IntVec> out;
    bool origin = false;
    for (const auto& v : vertices) {
        if (is_zero(v))
            origin = true;
        else
            out.push_back(v);
    }
    if (!origin) throw InvalidCell("delaunay_vectors: cell does not contain the origin");
    return out;
}

DelaunayCell DelaunayCell::translated(const IntVec& t) const {
    DelaunayCell c = *this;
    for (auto& v : c.vertices) v = add(v, t);
    std::sort(c.vertices.begin(), c.vertices.end());
    if (!c.hole.empty()) c.hole = add(c.hole, to_rat(t));
    return c;
}

DelaunayCell DelaunayCell::anchored() const { return translated(negate(vertices.front())); }

// ---- holes and cells ----------------------------------------------------------------

Hole hole_of(const GramForm& form, const std::vector<IntVec>& vertices) {
    if (vertices.empty()) throw InvalidCell("hole_of: no vertices");
    const IntVec& c = vertices.front();
    // Independent difference vectors span the affine hull.
    std::vector<IntVec> basis;
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        auto cand = basis;
        cand.push_back(sub(vertices[i], c));
        if (rational_rank(RatMatrix::from_int_rows(cand, form.rank())) == cand.size()) basis = std::move(cand);
    }
    if (basis.empty()) return {to_rat(c), Rational(0)};
    RatMatrix m(vertices.size() - 1, basis.size());
    RatVec rhs(vertices.size() - 1);
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        IntVec d = sub(vertices[i], c);
        for (std::size_t j = 0; j < basis.size(); ++j) m(i - 1, j) = 2 * form.inner(basis[j], d);
        rhs[i - 1] = form.norm(d);
    }
    auto t = solve_linear(m, rhs);
    if (!t) throw InvalidCell("hole_of: vertices are not cocircular");
    RatVec offset(form.rank());
    for (std::size_t j = 0; j < basis.size(); ++j) offset = add(offset, scale((*t)[j], to_rat(basis[j])));
    return {add(to_rat(c), offset), form.norm(offset)};
}

DelaunayCell delaunay_cell_at(const GramForm& form, const RatVec& alpha) {
    auto nearest = nearest_points(form, alpha);
    DelaunayCell cell;
    cell.vertices = std::move(nearest.points);
    cell.dim = affine_rank(cell.vertices);
    cell.hole = alpha;
    cell.radius_sq = nearest.distance_sq;
    return cell;
}

std::vector<IntVec> relevant_vectors(const GramForm& form) {
    const std::size_t r = form.rank();
    std::vector<IntVec> out;
    for (unsigned long mask = 1; mask < (1UL << r); ++mask) {
        IntVec c(r);
        RatVec center(r);
        for (std::size_t i = 0; i < r; ++i) {
            c[i] = (mask >> i) & 1UL;
            center[i] = Rational(-c[i], 2);
        }
        // Minima of B on c + 2X are c + 2y for y nearest to -c/2.
        auto nearest = nearest_points(form, center);
        if (nearest.points.size() != 2) continue;
        for (const auto& y : nearest.points) out.push_back(add(c, scale(2, y)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t default_rank_limit() {
    if (const char* env = std::getenv("SQAV_RANK_LIMIT")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return 5;
}

// ---- walking to a hole ------------------------------------------------------------------

namespace {

bool still_nearest(const GramForm& form, const IntVec& s0, const RatVec& p) {
    return nearest_points(form, p).distance_sq == form.norm(sub(to_rat(s0), p));
}

RatVec along(const RatVec& alpha, const Rational& t, const IntVec& dir) { return add(alpha, scale(t, to_rat(dir))); }

}  // namespace

DelaunayCell walk_to_maximal_cell(const GramForm& form, const RatVec& start, std::uint64_t seed) {
    const std::size_t r = form.rank();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);

    RatVec alpha = start;
    DelaunayCell cell = delaunay_cell_at(form, alpha);
    while (cell.dim < static_cast<int>(r)) {
        const IntVec& s0 = cell.vertices.front();
        // Directions keeping every current nearest point equidistant.
        std::vector<RatVec> rows;
        for (const auto& s : cell.vertices)
            if (s != s0) rows.push_back(form.apply(to_rat(sub(s, s0))));
        std::vector<RatVec> free_dirs;
        if (rows.empty()) {
            for (std::size_t i = 0; i < r; ++i) {
                RatVec e(r);
                e[i] = 1;
                free_dirs.push_back(e);
            }
        } else {
            free_dirs = null_space(RatMatrix::from_rows(rows, r));
        }
        RatVec mix(r);
        bool nonzero = false;
        while (!nonzero) {
            mix.assign(r, Rational(0));
            for (const auto& d : free_dirs) mix = add(mix, scale(Rational(coeff(rng)), d));
            nonzero = std::any_of(mix.begin(), mix.end(), [](const Rational& q) { return q != 0; });
        }
        const IntVec dir = to_int(scale(Rational(common_denominator(mix)), mix));

        // Bracket the exit parameter: s0 is nearest at t_lo and not at t_hi.
        const Rational dir_norm = form.norm(dir);
        Rational t_lo = 0;
        Rational t_hi = Rational(1, 4 * (static_cast<long long>(std::sqrt(dir_norm.convert_to<double>())) + 1));
        while (still_nearest(form, s0, along(alpha, t_hi, dir))) {
            t_lo = t_hi;
            t_hi *= 2;
        }
        const Rational rho_sq = cell.radius_sq;
        for (int iter = 0; iter < 64; ++iter) {
            const Rational half_sq = (t_hi - t_lo) * (t_hi - t_lo) * dir_norm / 4;
            if (9 * half_sq * 8 <= rho_sq) break;
            Rational mid = (t_lo + t_hi) / 2;
            if (still_nearest(form, s0, along(alpha, mid, dir)))
                t_lo = mid;
            else
                t_hi = mid;
        }

        // Every point hit first lies within the segment's tube; (a+b)^2 <= 9/8 a^2 + 9 b^2.
        const RatVec lo_pt = along(alpha, t_lo, dir), hi_pt = along(alpha, t_hi, dir);
        const Rational rho_max = std::max(form.norm(sub(to_rat(s0), lo_pt)), form.norm(sub(to_rat(s0), hi_pt)));
        const Rational half_sq = (t_hi - t_lo) * (t_hi - t_lo) * dir_norm / 4;
        const RatVec mid_pt = along(alpha, (t_lo + t_hi) / 2, dir);
        const Rational base_dist = form.norm(sub(to_rat(s0), alpha));
        std::optional<Rational> best;
        for (const auto& x : enumerate_ellipsoid(form, mid_pt, Rational(9, 8) * rho_max + 9 * half_sq)) {
            const long long g = form.inner(dir, sub(x, s0));
            if (g <= 0) continue;
            Rational t = (form.norm(sub(to_rat(x), alpha)) - base_dist) / (2 * g);
            if (!best || t < *best) best = t;
        }
        if (!best || *best > t_hi) throw InvariantViolation("walk_to_maximal_cell: no exit point found");
        alpha = along(alpha, *best, dir);
        DelaunayCell next = delaunay_cell_at(form, alpha);
        if (next.dim <= cell.dim) throw InvariantViolation("walk_to_maximal_cell: dimension did not grow");
        cell = std::move(next);
    }
    return cell;
}

// ---- StarComplex ---------------------------------------------------------------------

StarComplex::StarComplex(GramForm form, std::vector<DelaunayCell> cells)
    : form_(std::move(form)), cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end(), [](const DelaunayCell& a, const DelaunayCell& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
    });
    const std::size_t n = cells_.size();
    faces_.assign(n, {});
    cofaces_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        index_.emplace(cells_[i].vertices, i);
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || cells_[i].vertices.size() >= cells_[j].vertices.size()) continue;
            const auto& a = cells_[i].vertices;
            const auto& b = cells_[j].vertices;
            if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
                relations_.emplace_back(i, j);
                faces_[j].push_back(i);
                cofaces_[i].push_back(j);
            }
        }
    }
    std::sort(relations_.begin(), relations_.end());
    for (auto& f : faces_) std::sort(f.begin(), f.end());
    for (auto& f : cofaces_) std::sort(f.begin(), f.end());
    for (std::size_t i = 0; i < n; ++i) {
        if (cells_[i].dim != static_cast<int>(rank())) continue;
        max_cells_.push_back(i);
        cones_.emplace_back(cells_[i].delaunay_vectors(), rank());
        polytopes_.emplace_back(cells_[i].vertices, rank());
    }
}

std::optional<std::size_t> StarComplex::find(const std::vector<IntVec>& sorted_vertices) const {
    auto it = index_.find(sorted_vertices);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<IntVec> StarComplex::lattice_points() const {
    std::set<IntVec> pts;
    for (auto k : max_cells_)
        for (const auto& v : cells_[k].vertices) pts.insert(v);
    return {pts.begin(), pts.end()};
}

Rational StarComplex::covering_radius_sq() const {
    Rational best = 0;
    for (auto k : max_cells_) best = std::max(best, cells_[k].radius_sq);
    return best;
}

std::vector<std::vector<IntVec>> StarComplex::facets_of(const std::vector<IntVec>& vertices) const {
    const int k = affine_rank(vertices);
    std::set<std::vector<IntVec>> out;
    for (const auto& w : vertices) {
        std::vector<IntVec> key;
        for (const auto& v : vertices) key.push_back(sub(v, w));
        std::sort(key.begin(), key.end());
        auto idx = find(key);
        if (!idx) throw InvalidCell("facets_of: " + to_string(vertices.front()) + "... is not a Delaunay cell");
        for (auto f : faces_[*idx]) {
            if (cells_[f].dim != k - 1) continue;
            std::vector<IntVec> facet;
            for (const auto& v : cells_[f].vertices) facet.push_back(add(v, w));
            std::sort(facet.begin(), facet.end());
            out.insert(std::move(facet));
        }
    }
    return {out.begin(), out.end()};
}

bool StarComplex::covers(const RatVec& p) const {
    return std::any_of(polytopes_.begin(), polytopes_.end(), [&](const Polytope& poly) { return poly.contains(p); });
}

StarComplex star_from_maximal_cells(const GramForm& form, std::vector<std::vector<IntVec>> maximal) {
    for (auto& m : maximal) std::sort(m.begin(), m.end());
    std::sort(maximal.begin(), maximal.end());
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());

    std::set<std::vector<IntVec>> all(maximal.begin(), maximal.end());
    std::vector<std::vector<IntVec>> frontier(maximal.begin(), maximal.end());
    while (!frontier.empty()) {
        std::vector<std::vector<IntVec>> fresh;
        for (const auto& a : frontier)
            for (const auto& b : all) {
                std::vector<IntVec> meet;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
                if (!meet.empty() && !all.count(meet)) fresh.push_back(std::move(meet));
            }
        std::sort(fresh.begin(), fresh.end());
        fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
        for (const auto& f : fresh) all.insert(f);
        frontier = std::move(fresh);
    }

    const std::size_t r = form.rank();
    std::vector<Hole> max_holes;
    for (const auto& m : maximal) max_holes.push_back(hole_of(form, m));

    std::vector<DelaunayCell> cells;
    for (const auto& verts : all) {
        DelaunayCell c;
        c.vertices = verts;
        c.dim = affine_rank(verts);
        if (c.dim == static_cast<int>(r)) {
            auto h = hole_of(form, verts);
            c.hole = h.center;
            c.radius_sq = h.radius_sq;
        } else {
            // Barycentre of the Voronoi vertices: a centre in the relative interior of V(cell).
            RatVec sum(r);
            long long count = 0;
            for (std::size_t k = 0; k < maximal.size(); ++k) {
                if (!std::includes(maximal[k].begin(), maximal[k].end(), verts.begin(), verts.end())) continue;
                sum = add(sum, max_holes[k].center);
                ++count;
            }
            c.hole = scale(Rational(1, count), sum);
            c.radius_sq = form.norm(sub(c.hole, to_rat(verts.front())));
        }
        cells.push_back(std::move(c));
    }
    return StarComplex(form, std::move(cells));
}

StarComplex star_via_voronoi(const GramForm& form) {
    const std::size_t r = form.rank();
    const auto relevant = relevant_vectors(form);
    std::vector<RatVec> rows;
    std::vector<Rational> bounds;
    for (const auto& v : relevant) {
        rows.push_back(form.apply(to_rat(v)));
        bounds.emplace_back(form.norm(v), 2);
    }

    // Vertices of V(0): r independent tight facets, feasible for all others.
    std::set<RatVec> vertices;
    std::vector<std::size_t> chosen;
    auto feasible = [&](const RatVec& a) {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (dot(rows[i], a) > bounds[i]) return false;
        return true;
    };
    std::function<void(std::size_t)> dfs = [&](std::size_t next) {
        if (chosen.size() == r) {
            RatMatrix m(r, r);
            RatVec b(r);
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = 0; j < r; ++j) m(i, j) = rows[chosen[i]][j];
                b[i] = bounds[chosen[i]];
            }
            if (auto a = solve_linear(m, b); a && feasible(*a)) vertices.insert(*a);
            return;
        }
        for (std::size_t i = next; i + (r - chosen.size()) <= rows.size(); ++i) {
            chosen.push_back(i);
            std::vector<RatVec> sel;
            for (auto c : chosen) sel.push_back(rows[c]);
            if (rational_rank(RatMatrix::from_rows(sel, r)) == chosen.size()) dfs(i + 1);
            chosen.pop_back();
        }
    };
    dfs(0);

    std::vector<std::vector<IntVec>> maximal;
    for (const auto& a : vertices) {
        auto cell = delaunay_cell_at(form, a);
        if (cell.dim != static_cast<int>(r) || !cell.contains_vertex(IntVec(r, 0)))
            throw InvariantViolation("Voronoi vertex " + to_string(a) + " is not the hole of a maximal cell at 0");
        maximal.push_back(cell.vertices);
    }
    return star_from_maximal_cells(form, std::move(maximal));
}

StarComplex star_via_lifting(const GramForm& form) {
    const std::size_t r = form.rank();
    // Star(0) sits inside the ball of radius twice the covering radius,
    // and nearest-plane rounding bounds that radius^2 by sum(D_k)/4.
    Rational radius = 0;
    for (const auto& d : form.ldl_diagonal()) radius += d;

    for (int attempt = 0; attempt < 6; ++attempt, radius *= 2) {
        const auto xs = enumerate_ellipsoid(form, RatVec(r), radius);
        std::vector<LiftedPoint> pts;
        std::size_t apex = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (is_zero(xs[i])) apex = i;
            pts.push_back({xs[i], form.affine_height(xs[i])});
        }
        bool ok = true;
        std::vector<std::vector<IntVec>> maximal;
        for (const auto& f : lower_hull_at(pts, apex)) {
            // normal = B alpha + l/2
            RatVec rhs = f.normal;
            for (std::size_t i = 0; i < r; ++i) rhs[i] -= Rational(form.linear()[i], 2);
            RatMatrix b(r, r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) b(i, j) = form.entry(i, j);
            auto alpha = solve_linear(b, rhs);
            std::vector<IntVec> verts;
            for (auto i : f.incident) verts.push_back(xs[i]);
            auto nearest = nearest_points(form, *alpha);
            if (nearest.points != verts) {
                ok = false;
                break;
            }
            maximal.push_back(std::move(verts));
        }
        if (ok) return star_from_maximal_cells(form, std::move(maximal));
    }
    throw InvariantViolation("star_via_lifting: lifted facets never certified as empty spheres");
}

namespace {

void check_star(const StarComplex& s) {
    const std::size_t r = s.rank();
    for (const auto& c : s.cells()) {
        auto nearest = nearest_points(s.form(), c.hole);
        if (nearest.points != c.vertices || nearest.distance_sq != c.radius_sq)
            throw InvariantViolation("empty-sphere check failed for cell at " + to_string(c.hole));
        std::vector<IntVec> neg;
        for (const auto& v : c.vertices) neg.push_back(negate(v));
        std::sort(neg.begin(), neg.end());
        if (!s.find(neg)) throw InvariantViolation("star is not centrally symmetric");
    }
    if (s.max_cells().empty()) throw InvariantViolation("star has no maximal cells");
    for (std::size_t i = 0; i < s.cells().size(); ++i) {
        auto v = voronoi_cell(s.form(), s.cells()[i], s);
        if (v.dim + s.cells()[i].dim != static_cast<int>(r))
            throw InvariantViolation("duality dimension check failed");
    }
}

}  // namespace

StarComplex star(const GramForm& form, const StarOptions& options) {
    if (form.rank() > options.rank_limit)
        throw RankLimitExceeded("rank " + std::to_string(form.rank()) + " exceeds the full-star limit " +
                                std::to_string(options.rank_limit));
    StarComplex s = star_via_voronoi(form);
    if (options.verify) {
        check_star(s);
        if (form.rank() <= 3) {
            StarComplex lifted = star_via_lifting(form);
            if (lifted.cells() != s.cells())
                throw InvariantViolation("Voronoi-vertex and lifted-hull stars disagree");
        }
    }
    return s;
}

// ---- Voronoi cells -------------------------------------------------------------------

VoronoiCell voronoi_cell(const GramForm& form, const DelaunayCell& cell, const StarComplex& star) {
    auto idx = star.find(cell.vertices);
    if (!idx) throw InvalidCell("voronoi_cell: cell is not in the star");
    const auto& c = star.cells()[*idx];
    VoronoiCell out;
    out.dual_cell = c;
    std::set<RatVec> verts;
    if (c.dim == static_cast<int>(form.rank())) verts.insert(c.hole);
    for (auto j : star.cofaces_of(*idx))
        if (star.cells()[j].dim == static_cast<int>(form.rank())) verts.insert(star.cells()[j].hole);
    out.vertices.assign(verts.begin(), verts.end());

    std::vector<RatVec> diffs;
    for (std::size_t i = 1; i < out.vertices.size(); ++i) diffs.push_back(sub(out.vertices[i], out.vertices[0]));
    out.dim = diffs.empty() ? 0 : static_cast<int>(rational_rank(RatMatrix::from_rows(diffs, form.rank())));

    // Facets of V(x) for x in the cell, kept when they support V(cell).
    for (const auto& v : relevant_vectors(form)) {
        for (const auto& x : c.vertices) {
            VoronoiHalfspace h{v, Rational(form.norm(v), 2) + form.inner(x, v)};
            bool tight = std::any_of(out.vertices.begin(), out.vertices.end(),
                                     [&](const RatVec& a) { return form.inner(a, v) == h.bound; });
            if (tight && std::find(out.halfspaces.begin(), out.halfspaces.end(), h) == out.halfspaces.end())
                out.halfspaces.push_back(h);
        }
    }
    std::sort(out.halfspaces.begin(), out.halfspaces.end(), [](const auto& a, const auto& b) {
        return a.direction != b.direction ? a.direction < b.direction : a.bound < b.bound;
    });
    return out;
}

}  // namespace sqav
