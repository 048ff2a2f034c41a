#include "sqav/exact_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

namespace sqav {

// ---- RatMatrix --------------------------------------------------------------

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InvalidArgument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_int_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InvalidArgument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_int_columns(const std::vector<IntVec>& cols, std::size_t rows) {
    RatMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw InvalidArgument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

RatVec RatMatrix::row(std::size_t i) const {
    return RatVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatVec RatMatrix::operator*(const RatVec& v) const {
    if (v.size() != cols_) throw InvalidArgument("matrix-vector size mismatch");
    RatVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

// ---- vector helpers ---------------------------------------------------------

RatVec to_rat(const IntVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (long long x : v) out.emplace_back(x);
    return out;
}

IntVec add(const IntVec& a, const IntVec& b) {
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

IntVec scale(long long k, const IntVec& v) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = k * v[i];
    return out;
}

IntVec negate(const IntVec& v) { return scale(-1, v); }

RatVec add(const RatVec& a, const RatVec& b) {
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RatVec scale(const Rational& k, const RatVec& v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = k * v[i];
    return out;
}

Rational dot(const RatVec& a, const RatVec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const RatVec& a, const IntVec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0) s += a[i] * b[i];
    return s;
}

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

bool is_integral(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return denominator(q) == 1; });
}

IntVec to_int(const RatVec& v) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (denominator(v[i]) != 1) throw InvalidArgument("non-integral coordinate " + to_string(v[i]));
        out[i] = numerator(v[i]).convert_to<long long>();
    }
    return out;
}

Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

Integer common_denominator(const RatVec& v) {
    Integer d = 1;
    for (const auto& q : v) d = lcm(d, denominator(q));
    return d;
}

long long floor_to_ll(const Rational& q) {
    Integer n = numerator(q);
    Integer d = denominator(q);
    Integer f = n / d;  // truncates toward zero
    if (n < 0 && f * d != n) f -= 1;
    return f.convert_to<long long>();
}

long long ceil_to_ll(const Rational& q) { return -floor_to_ll(-q); }

Rational parse_rational(const std::string& text) {
    static const std::regex pattern(R"(-?\d+(/-?\d+)?)");
    if (!std::regex_match(text, pattern)) throw InvalidArgument("malformed rational '" + text + "'");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw InvalidArgument("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw InvalidArgument("malformed rational '" + text + "'");
    }
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const IntVec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::string to_string(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

// ---- elimination ------------------------------------------------------------

namespace {

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Scales to a primitive integer direction so equal hyperplanes compare equal.
RatVec normalize_direction(RatVec n) {
    Integer den = common_denominator(n);
    Integer g = 0;
    for (auto& q : n) {
        q *= den;
        g = boost::multiprecision::gcd(g, numerator(q));
    }
    if (g > 1)
        for (auto& q : n) q /= g;
    return n;
}

}  // namespace

std::optional<RatVec> solve_linear(const RatMatrix& m, const RatVec& b) {
    if (b.size() != m.rows()) throw InvalidArgument("solve_linear: rhs size mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto pivots = rref(aug, m.cols());
    if (pivots.size() != m.cols()) return std::nullopt;
    for (std::size_t i = pivots.size(); i < m.rows(); ++i)
        if (aug(i, m.cols()) != 0) return std::nullopt;
    RatVec y(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) y[pivots[i]] = aug(i, m.cols());
    return y;
}

std::size_t rational_rank(const RatMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer den = 1;
        for (std::size_t j = 0; j < cols; ++j) den = lcm(den, denominator(m(i, j)));
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = numerator(m(i, j)) * (den / denominator(m(i, j)));
    }
    // Bareiss fraction-free elimination.
    Integer prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

std::vector<RatVec> null_space(const RatMatrix& m) {
    RatMatrix r = m;
    auto pivots = rref(r, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVec v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

int affine_rank(const std::vector<IntVec>& points) {
    if (points.empty()) return -1;
    std::vector<IntVec> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
    if (diffs.empty()) return 0;
    return static_cast<int>(rational_rank(RatMatrix::from_int_rows(diffs, points[0].size())));
}

// ---- Smith normal form -------------------------------------------------------

SmithForm smith_normal_form(const RatMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (denominator(m(i, j)) != 1) throw InvalidArgument("smith_normal_form: non-integer entry");
            a[i][j] = numerator(m(i, j));
        }

    const std::size_t n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            // Smallest nonzero |entry| in the trailing block becomes the pivot.
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) break;
            std::swap(a[pi], a[t]);
            for (auto& row : a) std::swap(row[pj], row[t]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                Integer q = a[i][t] / a[t][t];
                if (q != 0)
                    for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                Integer q = a[t][j] / a[t][t];
                if (q != 0)
                    for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: fold an offending row into the pivot row and retry.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
    }

    SmithForm out;
    for (std::size_t t = 0; t < n; ++t) {
        out.factors.push_back(abs(a[t][t]));
        if (a[t][t] != 0) ++out.rank;
    }
    // Zeros can only trail once the loop exhausts nonzero blocks.
    std::stable_partition(out.factors.begin(), out.factors.end(), [](const Integer& d) { return d != 0; });
    return out;
}

SmithForm smith_normal_form(const std::vector<IntVec>& rows, std::size_t cols) {
    return smith_normal_form(RatMatrix::from_int_rows(rows, cols));
}

// ---- LP ----------------------------------------------------------------------

std::optional<RatVec> lp_feasible(const RatMatrix& a, const RatVec& b) {
    const std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m) throw InvalidArgument("lp_feasible: rhs size mismatch");
    const std::size_t width = n + m + 1;  // originals, artificials, rhs
    const std::size_t rhs = n + m;
    std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(width));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const int sign = b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * a(i, j);
        t[i][n + i] = 1;
        t[i][rhs] = sign * b[i];
        basis[i] = n + i;
    }
    // Phase-one objective: minimise the sum of artificials.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[m][j] -= t[i][j];
        t[m][rhs] -= t[i][rhs];
    }

    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < rhs; ++j)
            if (t[m][j] < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded direction; cannot happen in phase one
        Rational inv = 1 / t[leave][enter];
        for (auto& x : t[leave]) x *= inv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rational f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j)
                if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    if (t[m][rhs] != 0) return std::nullopt;
    RatVec y(n);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) y[basis[i]] = t[i][rhs];
    return y;
}

bool cone_membership(const RatVec& x, const std::vector<IntVec>& generators) {
    if (generators.empty()) throw InvalidArgument("cone_membership: no generators");
    return lp_feasible(RatMatrix::from_int_columns(generators, x.size()), x).has_value();
}

bool cone_membership(const IntVec& x, const std::vector<IntVec>& generators) {
    return cone_membership(to_rat(x), generators);
}

bool hull_membership(const RatVec& x, const std::vector<IntVec>& points) {
    if (points.empty()) return false;
    const std::size_t r = x.size();
    RatMatrix a(r + 1, points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        for (std::size_t i = 0; i < r; ++i) a(i, j) = points[j][i];
        a(r, j) = 1;
    }
    RatVec b = x;
    b.emplace_back(1);
    return lp_feasible(a, b).has_value();
}

// ---- Cone ----------------------------------------------------------------------

Cone::Cone(std::vector<IntVec> generators, std::size_t ambient_dim)
    : generators_(std::move(generators)), ambient_(ambient_dim) {
    generators_.erase(std::remove_if(generators_.begin(), generators_.end(),
                                     [](const IntVec& g) { return is_zero(g); }),
                      generators_.end());
    if (generators_.empty()) {
        for (std::size_t i = 0; i < ambient_; ++i) {
            RatVec e(ambient_);
            e[i] = 1;
            equations_.push_back(e);
        }
        return;
    }
    auto gens = RatMatrix::from_int_rows(generators_, ambient_);
    equations_ = null_space(gens);
    dim_ = ambient_ - equations_.size();

    std::set<RatVec> seen;
    for_each_combination(generators_.size(), dim_ - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<RatVec> rows;
        for (auto i : idx) rows.push_back(to_rat(generators_[i]));
        for (const auto& e : equations_) rows.push_back(e);
        auto ns = null_space(RatMatrix::from_rows(rows, ambient_));
        if (ns.size() != 1) return;
        RatVec normal = normalize_direction(ns[0]);
        bool pos = false, neg = false;
        for (const auto& g : generators_) {
            Rational v = dot(normal, g);
            if (v > 0) pos = true;
            if (v < 0) neg = true;
        }
        if (pos && neg) return;
        if (neg) normal = scale(Rational(-1), normal);
        if (!pos && !neg) return;
        if (seen.insert(normal).second) facets_.push_back(normal);
    });
}

bool Cone::contains(const RatVec& x) const {
    for (const auto& e : equations_)
        if (dot(e, x) != 0) return false;
    for (const auto& f : facets_)
        if (dot(f, x) < 0) return false;
    return true;
}

bool Cone::contains(const IntVec& x) const {
    for (const auto& e : equations_)
        if (dot(e, x) != 0) return false;
    for (const auto& f : facets_)
        if (dot(f, x) < 0) return false;
    return true;
}

// ---- Polytope ----------------------------------------------------------------------

Polytope::Polytope(std::vector<IntVec> vertices, std::size_t ambient_dim)
    : vertices_(std::move(vertices)), ambient_(ambient_dim) {
    if (vertices_.empty()) throw InvalidArgument("Polytope: no vertices");
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    const IntVec& base = vertices_[0];
    std::vector<IntVec> diffs;
    for (std::size_t i = 1; i < vertices_.size(); ++i) diffs.push_back(sub(vertices_[i], base));

    std::vector<RatVec> eq_normals;
    if (diffs.empty()) {
        for (std::size_t i = 0; i < ambient_; ++i) {
            RatVec e(ambient_);
            e[i] = 1;
            eq_normals.push_back(e);
        }
    } else {
        eq_normals = null_space(RatMatrix::from_int_rows(diffs, ambient_));
    }
    for (auto& n : eq_normals) equations_.push_back({n, dot(n, base)});
    dim_ = ambient_ - eq_normals.size();
    if (dim_ == 0) return;

    std::set<std::pair<RatVec, Rational>> seen;
    for_each_combination(vertices_.size(), dim_, [&](const std::vector<std::size_t>& idx) {
        std::vector<RatVec> rows;
        const IntVec& s0 = vertices_[idx[0]];
        for (std::size_t k = 1; k < idx.size(); ++k) rows.push_back(to_rat(sub(vertices_[idx[k]], s0)));
        for (const auto& e : eq_normals) rows.push_back(e);
        auto ns = null_space(RatMatrix::from_rows(rows, ambient_));
        if (ns.size() != 1) return;
        RatVec normal = normalize_direction(ns[0]);
        Rational offset = dot(normal, s0);
        bool pos = false, neg = false;
        for (const auto& v : vertices_) {
            Rational val = dot(normal, v) - offset;
            if (val > 0) pos = true;
            if (val < 0) neg = true;
        }
        if (pos && neg) return;
        if (neg) {
            normal = scale(Rational(-1), normal);
            offset = -offset;
        }
        if (seen.insert({normal, offset}).second) facets_.push_back({normal, offset});
    });
}

bool Polytope::on_span(const RatVec& x) const {
    for (const auto& e : equations_)
        if (dot(e.normal, x) != e.offset) return false;
    return true;
}

bool Polytope::contains(const RatVec& x) const {
    if (!on_span(x)) return false;
    for (const auto& f : facets_)
        if (dot(f.normal, x) < f.offset) return false;
    return true;
}

bool Polytope::relative_interior_contains(const RatVec& x) const {
    if (!on_span(x)) return false;
    for (const auto& f : facets_)
        if (dot(f.normal, x) <= f.offset) return false;
    return true;
}

std::vector<IntVec> Polytope::minimal_face_containing(const RatVec& x) const {
    std::vector<IntVec> face;
    for (const auto& v : vertices_) {
        bool keep = true;
        for (const auto& f : facets_)
            if (dot(f.normal, x) == f.offset && dot(f.normal, v) != f.offset) {
                keep = false;
                break;
            }
        if (keep) face.push_back(v);
    }
    return face;
}

// ---- lower hull ----------------------------------------------------------------------

namespace {

std::optional<LowerFacet> facet_through(const std::vector<LiftedPoint>& points,
                                        const std::vector<std::size_t>& subset, std::size_t r) {
    RatMatrix m(subset.size(), r + 1);
    RatVec h(subset.size());
    for (std::size_t k = 0; k < subset.size(); ++k) {
        const auto& p = points[subset[k]];
        for (std::size_t i = 0; i < r; ++i) m(k, i) = p.x[i];
        m(k, r) = 1;
        h[k] = p.height;
    }
    auto sol = solve_linear(m, h);
    if (!sol) return std::nullopt;
    LowerFacet f;
    f.normal.assign(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(r));
    f.offset = (*sol)[r];
    for (std::size_t j = 0; j < points.size(); ++j) {
        Rational gap = points[j].height - dot(f.normal, points[j].x) - f.offset;
        if (gap < 0) return std::nullopt;
        if (gap == 0) f.incident.push_back(j);
    }
    return f;
}

std::size_t check_hull_input(const std::vector<LiftedPoint>& points) {
    if (points.empty()) throw DegenerateHull("lower_hull: empty input");
    const std::size_t r = points[0].x.size();
    std::vector<IntVec> xs;
    for (const auto& p : points) {
        if (p.x.size() != r) throw InvalidArgument("lower_hull: mixed dimensions");
        xs.push_back(p.x);
    }
    if (affine_rank(xs) != static_cast<int>(r))
        throw DegenerateHull("lower_hull: projected points do not affinely span the space");
    return r;
}

void collect(std::vector<LowerFacet>& out, std::set<std::vector<std::size_t>>& seen, LowerFacet f) {
    if (seen.insert(f.incident).second) out.push_back(std::move(f));
}

bool covered(const std::vector<LowerFacet>& found, const std::vector<std::size_t>& subset) {
    for (const auto& f : found)
        if (std::includes(f.incident.begin(), f.incident.end(), subset.begin(), subset.end())) return true;
    return false;
}

}  // namespace

std::vector<LowerFacet> lower_hull(const std::vector<LiftedPoint>& points) {
    const std::size_t r = check_hull_input(points);
    std::vector<LowerFacet> out;
    std::set<std::vector<std::size_t>> seen;
    for_each_combination(points.size(), r + 1, [&](const std::vector<std::size_t>& idx) {
        if (covered(out, idx)) return;
        if (auto f = facet_through(points, idx, r)) collect(out, seen, std::move(*f));
    });
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.incident < b.incident; });
    return out;
}

std::vector<LowerFacet> lower_hull_at(const std::vector<LiftedPoint>& points, std::size_t apex) {
    const std::size_t r = check_hull_input(points);
    if (apex >= points.size()) throw InvalidArgument("lower_hull_at: apex out of range");
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (i != apex) others.push_back(i);
    std::vector<LowerFacet> out;
    std::set<std::vector<std::size_t>> seen;
    for_each_combination(others.size(), r, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::size_t> subset{apex};
        for (auto i : idx) subset.push_back(others[i]);
        std::sort(subset.begin(), subset.end());
        if (covered(out, subset)) return;
        if (auto f = facet_through(points, subset, r)) collect(out, seen, std::move(*f));
    });
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.incident < b.incident; });
    return out;
}

}  // namespace sqav
