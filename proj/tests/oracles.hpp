#pragma once

// Brute-force reference computations used to check the library. They avoid
// the library's enumeration, facet and Smith-form code paths.

#include "sqav/exact_linalg.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace oracle {

using sqav::Integer;
using sqav::IntVec;
using sqav::Rational;
using sqav::RatVec;
using Matrix = std::vector<std::vector<long long>>;

inline Rational qnorm(const Matrix& b, const RatVec& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) s += v[i] * b[i][j] * v[j];
    return s;
}

inline Rational qinner(const Matrix& b, const RatVec& u, const RatVec& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) s += u[i] * b[i][j] * v[j];
    return s;
}

inline RatVec rat(const IntVec& v) { return RatVec(v.begin(), v.end()); }

inline RatVec diff(const IntVec& x, const RatVec& c) {
    RatVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = Rational(x[i]) - c[i];
    return out;
}

/// Every integer point of the box [lo, hi]^r.
inline void for_each_in_box(std::size_t r, long long lo, long long hi, const std::function<void(const IntVec&)>& fn) {
    IntVec x(r, lo);
    while (true) {
        fn(x);
        std::size_t i = 0;
        while (i < r && x[i] == hi) x[i++] = lo;
        if (i == r) return;
        ++x[i];
    }
}

/// Lattice points of the box with Q(x - c) <= radius_sq, sorted.
inline std::vector<IntVec> ball(const Matrix& b, const RatVec& c, const Rational& radius_sq, long long box) {
    std::vector<IntVec> out;
    for_each_in_box(b.size(), -box, box, [&](const IntVec& x) {
        if (qnorm(b, diff(x, c)) <= radius_sq) out.push_back(x);
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::pair<Rational, std::vector<IntVec>> nearest(const Matrix& b, const RatVec& c, long long box) {
    Rational best = -1;
    std::vector<IntVec> pts;
    for_each_in_box(b.size(), -box, box, [&](const IntVec& x) {
        Rational d = qnorm(b, diff(x, c));
        if (best < 0 || d < best) {
            best = d;
            pts.clear();
        }
        if (d == best) pts.push_back(x);
    });
    std::sort(pts.begin(), pts.end());
    return {best, pts};
}

/// Determinant by cofactor expansion.
inline Integer det(const std::vector<IntVec>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Integer s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<IntVec> minor;
        for (std::size_t i = 1; i < n; ++i) {
            IntVec row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        Integer term = Integer(m[0][j]) * det(minor);
        s += (j % 2 ? -term : term);
    }
    return s;
}

/// Determinant by fraction-free (Bareiss) elimination.
inline Integer det_bareiss(const std::vector<IntVec>& rows) {
    const std::size_t n = rows.size();
    std::vector<std::vector<Integer>> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i].assign(rows[i].begin(), rows[i].end());
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return n == 0 ? Integer(1) : sign * m[n - 1][n - 1];
}

/// gcd of all maximal minors of a full-column-rank integer matrix (its lattice index).
inline Integer index_by_minors(const std::vector<IntVec>& rows) {
    const std::size_t r = rows.front().size();
    Integer g = 0;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t next) {
        if (pick.size() == r) {
            std::vector<IntVec> m;
            for (auto i : pick) m.push_back(rows[i]);
            Integer d = det_bareiss(m);
            if (d < 0) d = -d;
            g = boost::multiprecision::gcd(g, d);
            return;
        }
        for (std::size_t i = next; i < rows.size() && g != 1; ++i) {
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return g;
}

/// Symmetric positive-definite integer form M^T M + I with small random M.
inline Matrix random_form(std::size_t r, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> e(-1, 1);
    Matrix m(r, std::vector<long long>(r));
    for (auto& row : m)
        for (auto& v : row) v = e(rng);
    Matrix b(r, std::vector<long long>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t k = 0; k < r; ++k) b[i][j] += m[k][i] * m[k][j];
            if (i == j) b[i][j] += 1;
        }
    return b;
}

/// Product of random elementary integer matrices and sign flips.
inline Matrix random_unimodular(std::size_t r, std::mt19937_64& rng) {
    Matrix u(r, std::vector<long long>(r, 0));
    for (std::size_t i = 0; i < r; ++i) u[i][i] = 1;
    if (r == 1) {
        if (rng() & 1) u[0][0] = -1;
        return u;
    }
    std::uniform_int_distribution<std::size_t> idx(0, r - 1);
    std::uniform_int_distribution<int> mult(-1, 1);
    for (int step = 0; step < 6; ++step) {
        std::size_t a = idx(rng), b = idx(rng);
        if (a == b) {
            for (std::size_t k = 0; k < r; ++k) u[k][a] = -u[k][a];
            continue;
        }
        int m = mult(rng);
        for (std::size_t k = 0; k < r; ++k) u[k][a] += m * u[k][b];
    }
    return u;
}

inline IntVec apply(const Matrix& u, const IntVec& x) {
    IntVec out(u.size(), 0);
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) out[i] += u[i][j] * x[j];
    return out;
}

}  // namespace oracle
