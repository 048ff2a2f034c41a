#include "sqav/periodic_complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sqav {

namespace {

Rational determinant(RatMatrix m) {
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

std::size_t rank_of(const IntMatrix& m) {
    if (m.empty() || m.front().empty()) return 0;
    return rational_rank(RatMatrix::from_int_rows(m, m.front().size()));
}

// Assemble a complex from cells keyed by `key`; facets whose key is absent are dropped.
template <typename Key>
CellComplex assemble(const StarComplex& star, const std::set<std::vector<IntVec>>& keyed, Key key) {
    const std::size_t r = star.rank();
    CellComplex out;
    out.cells.assign(r + 1, {});
    for (const auto& c : keyed) out.cells[affine_rank(c)].push_back(c);
    std::vector<std::map<std::vector<IntVec>, std::size_t>> index(r + 1);
    for (std::size_t k = 0; k <= r; ++k)
        for (std::size_t i = 0; i < out.cells[k].size(); ++i) index[k].emplace(out.cells[k][i], i);

    out.boundary.assign(r + 1, {});
    for (std::size_t k = 1; k <= r; ++k) {
        IntMatrix m(out.cells[k - 1].size(), std::vector<long long>(out.cells[k].size(), 0));
        for (std::size_t j = 0; j < out.cells[k].size(); ++j) {
            const auto& cell = out.cells[k][j];
            for (const auto& facet : star.facets_of(cell)) {
                auto it = index[k - 1].find(key(facet));
                if (it == index[k - 1].end()) continue;
                m[it->second][j] += incidence_sign(cell, facet);
            }
        }
        out.boundary[k] = std::move(m);
    }
    return out;
}

}  // namespace

std::vector<std::size_t> CellComplex::counts() const {
    std::vector<std::size_t> out;
    for (const auto& c : cells) out.push_back(c.size());
    return out;
}

long long CellComplex::euler_characteristic() const {
    long long e = 0;
    for (std::size_t k = 0; k < cells.size(); ++k) e += (k % 2 ? -1 : 1) * static_cast<long long>(cells[k].size());
    return e;
}

bool CellComplex::is_chain_complex() const {
    for (std::size_t k = 2; k < boundary.size(); ++k) {
        const auto& a = boundary[k - 1];
        const auto& b = boundary[k];
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < cells[k].size(); ++j) {
                long long s = 0;
                for (std::size_t m = 0; m < b.size(); ++m) s += a[i][m] * b[m][j];
                if (s != 0) return false;
            }
    }
    return true;
}

std::vector<IntVec> canonical_representative(std::vector<IntVec> vertices, long long d) {
    std::sort(vertices.begin(), vertices.end());
    IntVec shift = vertices.front();
    for (auto& s : shift) s = s - ((s % d) + d) % d;
    for (auto& v : vertices) v = sub(v, shift);
    return vertices;
}

std::vector<IntVec> orientation_frame(const std::vector<IntVec>& vertices) {
    std::vector<IntVec> frame;
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        auto cand = frame;
        cand.push_back(sub(vertices[i], vertices.front()));
        if (rational_rank(RatMatrix::from_int_rows(cand, vertices.front().size())) == cand.size())
            frame = std::move(cand);
    }
    return frame;
}

int incidence_sign(const std::vector<IntVec>& cell, const std::vector<IntVec>& facet) {
    const std::size_t r = cell.front().size();
    const auto frame = orientation_frame(cell);
    const std::size_t k = frame.size();
    auto apex = std::find_if(cell.begin(), cell.end(),
                             [&](const IntVec& v) { return !std::binary_search(facet.begin(), facet.end(), v); });
    if (apex == cell.end()) throw InvalidCell("incidence_sign: facet is not a proper face");
    // Outward direction first, then the facet's own frame, all in cell-frame coordinates.
    std::vector<IntVec> vs{sub(facet.front(), *apex)};
    for (auto& e : orientation_frame(facet)) vs.push_back(std::move(e));
    const RatMatrix basis = RatMatrix::from_int_columns(frame, r);
    RatMatrix coords(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        auto c = solve_linear(basis, to_rat(vs[i]));
        if (!c) throw InvalidCell("incidence_sign: facet leaves the span of the cell");
        for (std::size_t j = 0; j < k; ++j) coords(i, j) = (*c)[j];
    }
    const Rational det = determinant(coords);
    if (det == 0) throw InvalidCell("incidence_sign: degenerate facet frame");
    return det > 0 ? 1 : -1;
}

QuotientComplex quotient_complex(const StarComplex& star, long long d) {
    if (d < 1) throw InvalidArgument("quotient_complex: period must be positive");
    std::set<std::vector<IntVec>> classes;
    for (const auto& t : torsion_points(star.rank(), d)) {
        const IntVec shift = to_int(scale(Rational(d), t));
        for (const auto& c : star.cells()) {
            std::vector<IntVec> verts;
            for (const auto& v : c.vertices) verts.push_back(add(v, shift));
            classes.insert(canonical_representative(std::move(verts), d));
        }
    }
    QuotientComplex out;
    static_cast<CellComplex&>(out) =
        assemble(star, classes, [d](const std::vector<IntVec>& f) { return canonical_representative(f, d); });
    out.period = d;
    return out;
}

CohomologyReport cohomology_dims(const CellComplex& complex) {
    const std::size_t n = complex.cells.size();
    std::vector<std::size_t> ranks(n + 1, 0);
    for (std::size_t k = 1; k < n; ++k) ranks[k] = rank_of(complex.boundary[k]);
    CohomologyReport out;
    for (std::size_t k = 0; k < n; ++k) {
        long long h = static_cast<long long>(complex.cells[k].size()) - static_cast<long long>(ranks[k + 1]) -
                      static_cast<long long>(ranks[k]);
        out.dims.push_back(h);
        out.euler += (k % 2 ? -1 : 1) * h;
    }
    return out;
}

CellComplex link_subcomplex(const StarComplex& star, const RatVec& z) {
    RatVec reduced = z;
    for (auto& q : reduced) q -= floor_to_ll(q);
    const auto cells = cells_containing(star, reduced);
    std::set<std::vector<IntVec>> keyed(cells.begin(), cells.end());
    return assemble(star, keyed, [](const std::vector<IntVec>& f) { return f; });
}

std::vector<long long> link_cohomology(const CellComplex& link, std::size_t rank) {
    const auto h = cohomology_dims(link).dims;
    std::vector<long long> w(rank + 1, 0);
    for (std::size_t i = 0; i <= rank; ++i) w[i] = h[rank - i];
    return w;
}

std::vector<RatVec> torsion_points(std::size_t rank, long long d) {
    std::vector<RatVec> out;
    IntVec k(rank, 0);
    while (true) {
        RatVec z(rank);
        for (std::size_t i = 0; i < rank; ++i) z[i] = Rational(k[i], d);
        out.push_back(std::move(z));
        std::size_t i = rank;
        while (i > 0 && k[i - 1] == d - 1) k[--i] = 0;
        if (i == 0) break;
        ++k[i - 1];
    }
    return out;
}

H0Report h0_Ld(const StarComplex& star, long long d) {
    if (d < 1) throw InvalidArgument("h0_Ld: degree must be positive");
    const std::size_t r = star.rank();
    std::vector<long long> point(r + 1, 0);
    point[0] = 1;
    H0Report out;
    for (const auto& z : torsion_points(r, d)) {
        H0Witness w{z, minimal_cell_containing(star, z), link_cohomology(link_subcomplex(star, z), r)};
        if (w.link_cohomology != point)
            throw InvariantViolation("link of " + to_string(z) + " is not contractible");
        out.witnesses.push_back(std::move(w));
        ++out.count;
    }
    return out;
}

}  // namespace sqav
