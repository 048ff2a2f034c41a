#include "sqav/invariants.hpp"

#include "sqav/form_spec.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace sqav {

Integer binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    Integer out = 1;
    for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

std::vector<Integer> hodge_numbers(std::size_t rank, std::size_t abelian_rank) {
    std::vector<Integer> out;
    const long long r = rank, a = abelian_rank;
    for (long long i = 0; i <= r + a; ++i) {
        Integer h = 0;
        for (long long p = 0; p <= i; ++p) h += binomial(r, p) * binomial(a, i - p);
        out.push_back(h);
    }
    return out;
}

StrataReport strata_inventory(const StarComplex& star, const DegenData& data, std::size_t abelian_rank) {
    const std::size_t r = star.rank();
    const auto qc = quotient_complex(star, 1);
    StrataReport out;
    out.class_counts = qc.counts();
    out.kissing_number = star.max_cells().size();
    out.components = qc.cells[r].size();
    out.reduced = true;
    for (const auto& verts : qc.cells[r]) {
        DelaunayCell cell;
        cell.vertices = verts;
        cell.dim = static_cast<int>(r);
        auto h = hole_of(data.form(), verts);
        cell.hole = h.center;
        cell.radius_sq = h.radius_sq;
        Integer m = multiplicity(data, cell);
        if (m != 1) out.reduced = false;
        out.maximal_classes.push_back({verts, m});
    }
    out.abelian_rank = abelian_rank;
    out.hodge = hodge_numbers(r, abelian_rank);
    return out;
}

ThetaBasisReport theta_basis(const StarComplex& star, long long d, std::size_t abelian_rank) {
    if (d < 1) throw InvalidArgument("theta_basis: degree must be positive");
    ThetaBasisReport out;
    out.degree = d;
    for (const auto& z : torsion_points(star.rank(), d)) {
        ThetaEntry e;
        e.z = z;
        e.minimal_cell = minimal_cell_containing(star, z);
        e.cell_dim = affine_rank(e.minimal_cell);
        e.support_size = cells_containing(star, z).size();
        out.entries.push_back(std::move(e));
    }
    out.total = out.entries.size();
    out.total_with_abelian = 1;
    for (std::size_t i = 0; i < star.rank() + abelian_rank; ++i) out.total_with_abelian *= d;
    return out;
}

bool primitive_in_scaled_star(const StarComplex& star, std::vector<std::string>* witnesses) {
    const Rational inv_r(1, static_cast<long long>(star.rank()));
    bool ok = true;
    for (const auto& w : primitive_vectors(star)) {
        if (star.covers(scale(inv_r, to_rat(w)))) continue;
        ok = false;
        if (witnesses) witnesses->push_back("primitive vector " + to_string(w) + " is not in r*Star(0)");
    }
    return ok;
}

bool differences_generate(const StarComplex& star, long long d, std::vector<std::string>* witnesses) {
    const std::size_t r = star.rank();
    const auto qc = quotient_complex(star, 1);
    bool ok = true;
    for (std::size_t k = 1; k <= r; ++k) {
        for (const auto& verts : qc.cells[k]) {
            const Polytope poly(verts, r);
            IntVec lo = verts.front(), hi = verts.front();
            for (const auto& v : verts)
                for (std::size_t i = 0; i < r; ++i) {
                    lo[i] = std::min(lo[i], v[i]);
                    hi[i] = std::max(hi[i], v[i]);
                }
            // Interior points of the cell in (1/d)X, as numerators over d.
            std::vector<IntVec> interior;
            IntVec n = scale(d, lo);
            while (true) {
                RatVec p(r);
                for (std::size_t i = 0; i < r; ++i) p[i] = Rational(n[i], d);
                if (poly.relative_interior_contains(p)) interior.push_back(n);
                std::size_t i = 0;
                while (i < r && n[i] == d * hi[i]) n[i] = d * lo[i], ++i;
                if (i == r) break;
                ++n[i];
            }
            std::vector<IntVec> diffs;
            for (std::size_t i = 1; i < interior.size(); ++i) diffs.push_back(sub(interior[i], interior.front()));
            bool good = false;
            if (!diffs.empty()) {
                auto snf = smith_normal_form(diffs, r);
                good = snf.rank == k && std::all_of(snf.factors.begin(), snf.factors.begin() + snf.rank,
                                                    [](const Integer& f) { return f == 1; });
            }
            if (!good) {
                ok = false;
                if (witnesses)
                    witnesses->push_back("cell " + to_string(verts.front()) + "+... (dim " + std::to_string(k) +
                                         ", " + std::to_string(interior.size()) + " interior points) at d = " +
                                         std::to_string(d));
            }
        }
    }
    return ok;
}

bool star_differences_avoid(const StarComplex& star, const Rational& epsilon, std::vector<std::string>* witnesses) {
    const std::size_t r = star.rank();
    const GramForm& form = star.form();
    // p - p' = (2+eps)y with p, p' in Star(0) forces Q(y) < 4 * covering radius^2.
    const Rational bound = 4 * star.covering_radius_sq();
    const auto& ids = star.max_cells();
    bool ok = true;
    for (const auto& y : enumerate_ellipsoid(form, RatVec(r), bound)) {
        if (is_zero(y)) continue;
        const RatVec target = scale(2 + epsilon, to_rat(y));
        for (std::size_t a = 0; a < ids.size(); ++a) {
            const auto& c1 = star.cells()[ids[a]];
            for (std::size_t b = 0; b < ids.size(); ++b) {
                const auto& c2 = star.cells()[ids[b]];
                // Circumscribed balls must meet after the shift.
                const double gap = std::sqrt(form.norm(sub(target, sub(c1.hole, c2.hole))).convert_to<double>());
                const double reach = std::sqrt(c1.radius_sq.convert_to<double>()) +
                                     std::sqrt(c2.radius_sq.convert_to<double>());
                if (gap > reach + 1e-9) continue;
                const std::size_t n1 = c1.vertices.size(), n2 = c2.vertices.size();
                RatMatrix m(r + 2, n1 + n2);
                RatVec rhs(r + 2);
                for (std::size_t i = 0; i < r; ++i) {
                    for (std::size_t j = 0; j < n1; ++j) m(i, j) = c1.vertices[j][i];
                    for (std::size_t j = 0; j < n2; ++j) m(i, n1 + j) = -c2.vertices[j][i];
                    rhs[i] = target[i];
                }
                for (std::size_t j = 0; j < n1; ++j) m(r, j) = 1;
                for (std::size_t j = 0; j < n2; ++j) m(r + 1, n1 + j) = 1;
                rhs[r] = rhs[r + 1] = 1;
                if (!lp_feasible(m, rhs)) continue;
                ok = false;
                if (witnesses)
                    witnesses->push_back("(2+eps)" + to_string(y) + " is a difference of two points of Star(0)");
            }
        }
    }
    return ok;
}

VeryAmpleReport very_ample_check(const StarComplex& star, long long d) {
    VeryAmpleReport out;
    out.degree = d;
    out.cond_i = primitive_in_scaled_star(star, &out.witnesses);
    out.cond_ii = differences_generate(star, d, &out.witnesses);
    out.cond_iii = star_differences_avoid(star, Rational(1, 1000), &out.witnesses);
    return out;
}

SampleReport sample_maximal_cells(const DegenData& data, std::size_t count, std::uint64_t seed) {
    const std::size_t r = data.form().rank();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> num(0, 9999);
    SampleReport out;
    out.base_change = 1;
    for (std::size_t s = 0; s < count; ++s) {
        SampledCell sc;
        sc.start.resize(r);
        for (auto& q : sc.start) q = Rational(num(rng), 10000);
        sc.cell = walk_to_maximal_cell(data.form(), sc.start, rng());
        const auto lattice = cell_lattice_data(sc.cell);
        sc.index = lattice.index;
        sc.nilpotency = lattice.nilpotency;
        sc.multiplicity = multiplicity(data, sc.cell);
        sc.dA_integral = is_integral(dA_at_hole(data, sc.cell));
        out.base_change = lcm(out.base_change, sc.multiplicity);
        out.samples.push_back(std::move(sc));
    }
    return out;
}

bool ExampleReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

template <typename T>
std::string join(const std::vector<T>& v) {
    std::ostringstream ss;
    ss << "(";
    for (std::size_t i = 0; i < v.size(); ++i) ss << (i ? "," : "") << v[i];
    ss << ")";
    return ss.str();
}

template <typename T>
void expect(ExampleReport& rep, std::string id, std::string statement, const T& expected, const T& actual) {
    std::ostringstream e, a;
    e << std::boolalpha;
    a << std::boolalpha;
    if constexpr (requires { join(expected); }) {
        e << join(expected);
        a << join(actual);
    } else {
        e << expected;
        a << actual;
    }
    rep.checks.push_back({std::move(id), std::move(statement), e.str(), a.str(), expected == actual});
}

std::vector<long long> to_ll(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

std::vector<long long> star_counts(const StarComplex& s) {
    std::vector<long long> out(s.rank() + 1, 0);
    for (const auto& c : s.cells()) ++out[c.dim];
    return out;
}

}  // namespace

ExampleReport example_report(const std::string& preset) {
    ExampleReport rep;
    rep.preset = preset;
    const FormSpec spec = preset_spec(preset);
    const DegenData data = spec.data();

    if (spec.preset == "e8") {
        auto samples = sample_maximal_cells(data, 24, 8);
        bool idx = true, mult = true, nonint = true;
        for (const auto& s : samples.samples) {
            idx = idx && (s.index == 2 || s.index == 3);
            mult = mult && (s.multiplicity == 2 || s.multiplicity == 3);
            nonint = nonint && !s.dA_integral;
        }
        expect(rep, "e8.samples", "at least 20 sampled maximal cells", true, samples.samples.size() >= 20);
        expect(rep, "e8.index", "Delaunay vectors span a sublattice of index 2 or 3", true, idx);
        expect(rep, "e8.multiplicity", "every component has multiplicity 2 or 3", true, mult);
        expect(rep, "e8.dA", "dA(alpha) is not integral on X", true, nonint);
        expect(rep, "e8.base_change", "minimal base change is lcm(2,3)", std::string("6"),
               samples.base_change.str());
        return rep;
    }

    const StarComplex s = star(data.form(), StarOptions{true, default_rank_limit()});
    const std::size_t r = s.rank();
    const auto strata = strata_inventory(s, data);
    const auto h = cohomology_dims(quotient_complex(s, 1));
    std::vector<long long> binom;
    for (const auto& b : hodge_numbers(r, 0)) binom.push_back(b.convert_to<long long>());
    expect(rep, "cohomology.binomial", "h^i(P_0, O) = C(g, i)", binom, h.dims);
    std::vector<long long> h0, powers;
    const long long dmax = r == 1 ? 5 : 4;
    for (long long d = 1; d <= dmax; ++d) {
        h0.push_back(h0_Ld(s, d).count);
        long long p = 1;
        for (std::size_t i = 0; i < r; ++i) p *= d;
        powers.push_back(p);
    }
    expect(rep, "h0.power", "h^0(P_0, L^d) = d^g", powers, h0);

    if (spec.preset == "dim1") {
        expect(rep, "star.counts", "Star(0) is two intervals at a vertex", std::vector<long long>{1, 2},
               star_counts(s));
        expect(rep, "strata.classes", "one vertex and one edge mod X: a nodal rational curve",
               std::vector<long long>{1, 1}, to_ll(strata.class_counts));
        expect(rep, "strata.components", "one irreducible component", std::size_t{1}, strata.components);
    } else if (spec.preset == "dim2-square") {
        expect(rep, "star.counts", "Star(0) has 1 vertex, 4 edges, 4 squares", std::vector<long long>{1, 4, 4},
               star_counts(s));
        expect(rep, "strata.classes", "classes mod X (1, 2, 1)", std::vector<long long>{1, 2, 1},
               to_ll(strata.class_counts));
        expect(rep, "strata.components", "one irreducible component", std::size_t{1}, strata.components);
        expect(rep, "strata.kissing", "kissing number 4", std::size_t{4}, strata.kissing_number);
        expect(rep, "base_change.minimal", "minimal base change 2", std::string("2"),
               minimal_base_change(data, s).str());
    } else if (spec.preset == "dim2-hex") {
        expect(rep, "star.counts", "Star(0) has 1 vertex, 6 edges, 6 triangles", std::vector<long long>{1, 6, 6},
               star_counts(s));
        expect(rep, "strata.classes", "classes mod X (1, 3, 2)", std::vector<long long>{1, 3, 2},
               to_ll(strata.class_counts));
        expect(rep, "strata.components", "two irreducible components", std::size_t{2}, strata.components);
        expect(rep, "strata.kissing", "kissing number 6", std::size_t{6}, strata.kissing_number);
        expect(rep, "strata.edge_classes", "the two components meet in 3 points, one edge class each",
               std::size_t{3}, strata.class_counts[1]);
    } else {
        expect(rep, "complex.euler", "Euler characteristic of the torus complex is 0", 0LL,
               quotient_complex(s, 1).euler_characteristic());
        bool total = true;
        for (const auto& c : s.cells()) total = total && is_totally_generating(c);
        expect(rep, "cells.totally_generating", "all Delaunay cells are totally generating", true, total);
        expect(rep, "cells.nilpotency", "nilpotency 1", std::string("1"), nilpotency_of_decomposition(s).str());
    }
    return rep;
}

}  // namespace sqav
