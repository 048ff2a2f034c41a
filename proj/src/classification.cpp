#include "sqav/delaunay.hpp"

#include <algorithm>
#include <set>

namespace sqav {

namespace {

struct BoundedCone {
    std::vector<IntVec> points;  // nonzero lattice points of the cone with height <= bound, by height
    std::vector<Rational> heights;
};

// Every Hilbert basis element w = sum t_i g_i with 0 <= t_i < 1 over k independent
// generators, so h(w) <= sum of the k largest h(g) for any functional h positive on the cone.
BoundedCone bounded_points(const Cone& cone) {
    const auto& gens = cone.generators();
    BoundedCone out;
    if (gens.empty()) return out;
    const std::size_t n = gens.front().size();

    RatVec h(n);
    for (const auto& f : cone.facets()) h = add(h, f);
    if (cone.facets().empty()) {
        // A ray: use the generator direction itself.
        for (std::size_t i = 0; i < n; ++i) h[i] = gens.front()[i];
    }
    std::vector<Rational> hg;
    for (const auto& g : gens) {
        Rational v = dot(h, g);
        if (v <= 0) throw InvalidCell("cone is not pointed");
        hg.push_back(v);
    }
    auto sorted = hg;
    std::sort(sorted.rbegin(), sorted.rend());
    Rational bound = 0;
    for (std::size_t i = 0; i < std::min(cone.dim(), sorted.size()); ++i) bound += sorted[i];

    IntVec lo(n, 0), hi(n, 0);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        Rational t = bound / hg[k];
        for (std::size_t i = 0; i < n; ++i) {
            Rational e = t * gens[k][i];
            lo[i] = std::min(lo[i], floor_to_ll(e));
            hi[i] = std::max(hi[i], ceil_to_ll(e));
        }
    }

    std::vector<std::pair<Rational, IntVec>> found;
    IntVec x = lo;
    while (true) {
        if (!is_zero(x)) {
            Rational hx = dot(h, x);
            if (hx > 0 && hx <= bound && cone.contains(x)) found.emplace_back(hx, x);
        }
        std::size_t i = 0;
        while (i < n && x[i] == hi[i]) x[i] = lo[i], ++i;
        if (i == n) break;
        ++x[i];
    }
    std::sort(found.begin(), found.end());
    for (auto& [hx, p] : found) {
        out.heights.push_back(hx);
        out.points.push_back(std::move(p));
    }
    return out;
}

}  // namespace

std::vector<IntVec> primitive_vectors(const Cone& cone) {
    const auto b = bounded_points(cone);
    std::set<IntVec> pset(b.points.begin(), b.points.end());
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < b.points.size(); ++i) {
        bool decomposable = false;
        for (std::size_t j = 0; j < b.points.size() && b.heights[j] < b.heights[i]; ++j)
            if (pset.count(sub(b.points[i], b.points[j]))) {
                decomposable = true;
                break;
            }
        if (!decomposable) out.push_back(b.points[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVec> primitive_vectors(const StarComplex& star) {
    // Faces of a maximal cone are faces of the cone, so their Hilbert bases are included.
    std::set<IntVec> all;
    for (std::size_t k = 0; k < star.max_cells().size(); ++k)
        for (auto& v : primitive_vectors(star.max_cone(k))) all.insert(std::move(v));
    return {all.begin(), all.end()};
}

bool cellmates(const StarComplex& star, const std::vector<IntVec>& xs) {
    for (std::size_t k = 0; k < star.max_cells().size(); ++k) {
        const auto& cone = star.max_cone(k);
        if (std::all_of(xs.begin(), xs.end(), [&](const IntVec& x) { return cone.contains(x); })) return true;
    }
    return false;
}

CellLatticeData cell_lattice_data(const DelaunayCell& cell) {
    if (cell.vertices.empty()) throw InvalidCell("cell has no vertices");
    const DelaunayCell c = cell.contains_vertex(IntVec(cell.vertices.front().size(), 0)) ? cell : cell.anchored();
    const auto dv = c.delaunay_vectors();
    CellLatticeData out{{}, Integer(1), Integer(1)};
    if (dv.empty()) return out;
    auto snf = smith_normal_form(dv, c.vertices.front().size());
    for (std::size_t i = 0; i < snf.rank; ++i) {
        out.smith_factors.push_back(snf.factors[i]);
        out.index *= snf.factors[i];
    }
    if (!out.smith_factors.empty()) out.nilpotency = out.smith_factors.back();
    return out;
}

bool is_generating(const DelaunayCell& cell) { return cell_lattice_data(cell).index == 1; }

Integer nilpotency(const DelaunayCell& cell) { return cell_lattice_data(cell).nilpotency; }

bool is_totally_generating(const DelaunayCell& cell) {
    if (!is_generating(cell)) return false;
    const DelaunayCell c = cell.contains_vertex(IntVec(cell.vertices.front().size(), 0)) ? cell : cell.anchored();
    const auto dv = c.delaunay_vectors();
    if (dv.empty()) return true;
    const Cone cone(dv, c.vertices.front().size());
    // Points are sorted by a height positive on the cone, so every proper
    // summand of a point is decided before the point itself.
    const auto b = bounded_points(cone);
    std::set<IntVec> reachable;
    for (const auto& p : b.points) {
        bool ok = false;
        for (const auto& v : dv) {
            IntVec rest = sub(p, v);
            if (is_zero(rest) || reachable.count(rest)) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
        reachable.insert(p);
    }
    return true;
}

Integer nilpotency_of_decomposition(const StarComplex& star) {
    Integer n = 1;
    for (auto k : star.max_cells()) n = lcm(n, nilpotency(star.cells()[k]));
    return n;
}

}  // namespace sqav
