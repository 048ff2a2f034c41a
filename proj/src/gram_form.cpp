#include "sqav/gram_form.hpp"

#include <algorithm>
#include <cmath>

namespace sqav {

GramForm::GramForm(Matrix gram, IntVec linear) : gram_(std::move(gram)), linear_(std::move(linear)) {
    const std::size_t r = gram_.size();
    if (r == 0) throw InvalidForm("gram matrix is empty");
    for (std::size_t i = 0; i < r; ++i)
        if (gram_[i].size() != r) throw InvalidForm("gram matrix is not square");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw InvalidForm("gram matrix is not symmetric at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
    if (linear_.empty()) linear_.assign(r, 0);
    if (linear_.size() != r) throw InvalidForm("linear part has wrong length");

    diag_.assign(r, Rational(0));
    lower_.assign(r, RatVec(r, Rational(0)));
    Rational minor = 1;
    for (std::size_t j = 0; j < r; ++j) {
        Rational d = gram_[j][j];
        for (std::size_t k = 0; k < j; ++k) d -= lower_[j][k] * lower_[j][k] * diag_[k];
        minor *= d;
        if (d <= 0)
            throw InvalidForm("gram matrix is not positive definite: leading principal minor of order " +
                              std::to_string(j + 1) + " is " + to_string(minor));
        diag_[j] = d;
        lower_[j][j] = 1;
        for (std::size_t i = j + 1; i < r; ++i) {
            Rational s = gram_[i][j];
            for (std::size_t k = 0; k < j; ++k) s -= lower_[i][k] * lower_[j][k] * diag_[k];
            lower_[i][j] = s / d;
        }
    }
}

Rational GramForm::inner(const RatVec& a, const RatVec& b) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a[i] == 0) continue;
        Rational row = 0;
        for (std::size_t j = 0; j < rank(); ++j)
            if (gram_[i][j] != 0) row += gram_[i][j] * b[j];
        s += a[i] * row;
    }
    return s;
}

Rational GramForm::inner(const RatVec& a, const IntVec& b) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a[i] == 0) continue;
        long long row = 0;
        for (std::size_t j = 0; j < rank(); ++j) row += gram_[i][j] * b[j];
        s += a[i] * row;
    }
    return s;
}

long long GramForm::inner(const IntVec& a, const IntVec& b) const {
    long long s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) s += a[i] * gram_[i][j] * b[j];
    return s;
}

RatVec GramForm::apply(const RatVec& v) const {
    RatVec out(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < rank(); ++j)
            if (gram_[i][j] != 0) s += gram_[i][j] * v[j];
        out[i] = s;
    }
    return out;
}

Rational GramForm::affine_height(const IntVec& x) const {
    long long lx = 0;
    for (std::size_t i = 0; i < rank(); ++i) lx += linear_[i] * x[i];
    return Rational(norm(x) + lx, 2);
}

GramForm GramForm::scaled(long long n) const {
    if (n <= 0) throw InvalidArgument("scale factor must be positive");
    Matrix g = gram_;
    for (auto& row : g)
        for (auto& e : row) e *= n;
    return GramForm(std::move(g), scale(n, linear_));
}

GramForm GramForm::transformed(const Matrix& u) const {
    const std::size_t r = rank();
    Matrix g(r, std::vector<long long>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            long long s = 0;
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = 0; b < r; ++b) s += u[a][i] * gram_[a][b] * u[b][j];
            g[i][j] = s;
        }
    IntVec l(r, 0);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t a = 0; a < r; ++a) l[j] += linear_[a] * u[a][j];
    return GramForm(std::move(g), std::move(l));
}

// ---- Fincke-Pohst enumeration ------------------------------------------------------
//
// With B = L D L^T, Q(z) = sum_k D_k (z_k + sum_{j>k} L_jk z_j)^2, so the last
// coordinate is fixed first and every level contributes one exact square.

namespace {

struct Enumerator {
    const GramForm& form;
    const RatVec& center;
    IntVec x;
    std::vector<IntVec>* out;

    Rational level_center(std::size_t k) const {
        const auto& L = form.ldl_lower();
        Rational m = center[k];
        for (std::size_t j = k + 1; j < form.rank(); ++j)
            if (L[j][k] != 0) m -= L[j][k] * (x[j] - center[j]);
        return m;
    }

    void run(std::size_t level, const Rational& remaining) {
        const std::size_t k = level - 1;
        const Rational d = form.ldl_diagonal()[k];
        const Rational m = level_center(k);
        auto fits = [&](long long v) {
            Rational t = v - m;
            return d * t * t <= remaining;
        };
        const double md = m.convert_to<double>();
        const double sd = std::sqrt(std::max(0.0, (remaining / d).convert_to<double>()));
        long long lo = static_cast<long long>(std::floor(md - sd)) - 1;
        long long hi = static_cast<long long>(std::ceil(md + sd)) + 1;
        while (fits(lo)) --lo;
        while (fits(hi)) ++hi;
        for (long long v = lo + 1; v < hi; ++v) {
            Rational t = v - m;
            Rational rest = remaining - d * t * t;
            if (rest < 0) continue;
            x[k] = v;
            if (k == 0)
                out->push_back(x);
            else
                run(k, rest);
        }
    }
};

}  // namespace

std::vector<IntVec> enumerate_ellipsoid(const GramForm& form, const RatVec& center, const Rational& radius_sq) {
    if (center.size() != form.rank()) throw InvalidArgument("enumerate_ellipsoid: center has wrong length");
    std::vector<IntVec> out;
    if (radius_sq < 0) return out;
    Enumerator e{form, center, IntVec(form.rank(), 0), &out};
    e.run(form.rank(), radius_sq);
    std::sort(out.begin(), out.end());
    return out;
}

NearestPoints nearest_points(const GramForm& form, const RatVec& center) {
    const std::size_t r = form.rank();
    if (center.size() != r) throw InvalidArgument("nearest_points: center has wrong length");
    // Nearest-plane rounding gives an upper bound for the search radius.
    IntVec guess(r, 0);
    const auto& L = form.ldl_lower();
    for (std::size_t k = r; k-- > 0;) {
        Rational m = center[k];
        for (std::size_t j = k + 1; j < r; ++j)
            if (L[j][k] != 0) m -= L[j][k] * (guess[j] - center[j]);
        guess[k] = floor_to_ll(m + Rational(1, 2));
    }
    Rational bound = form.norm(sub(to_rat(guess), center));
    NearestPoints best{bound, {}};
    for (auto& p : enumerate_ellipsoid(form, center, bound)) {
        Rational dist = form.norm(sub(to_rat(p), center));
        if (dist < best.distance_sq) {
            best.distance_sq = dist;
            best.points.clear();
        }
        if (dist == best.distance_sq) best.points.push_back(std::move(p));
    }
    return best;
}

}  // namespace sqav
