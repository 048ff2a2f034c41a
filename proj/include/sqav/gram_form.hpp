#pragma once

#include "sqav/exact_linalg.hpp"

#include <vector>

namespace sqav {

class InvalidForm : public std::runtime_error {
public:
    explicit InvalidForm(const std::string& what) : std::runtime_error(what) {}
};

/**
 * Positive-definite symmetric integer form B on X = Z^r together with a
 * linear part l, so that the affine height is A(x) = (B(x,x) + l.x) / 2.
 *
 * Symmetry and positive definiteness (all leading principal minors > 0) are
 * checked at construction; the LDL^T factorisation used by lattice
 * enumeration is computed once and kept.
 */
class GramForm {
public:
    using Matrix = std::vector<std::vector<long long>>;

    explicit GramForm(Matrix gram, IntVec linear = {});

    std::size_t rank() const { return gram_.size(); }
    const Matrix& gram() const { return gram_; }
    const IntVec& linear() const { return linear_; }

    long long entry(std::size_t i, std::size_t j) const { return gram_[i][j]; }

    Rational inner(const RatVec& a, const RatVec& b) const;
    Rational inner(const RatVec& a, const IntVec& b) const;
    long long inner(const IntVec& a, const IntVec& b) const;
    Rational norm(const RatVec& a) const { return inner(a, a); }
    long long norm(const IntVec& a) const { return inner(a, a); }

    /// B applied to v, i.e. the functional x -> B(v, x) as a coefficient vector.
    RatVec apply(const RatVec& v) const;

    /// A(x) = (B(x,x) + l.x) / 2.
    Rational affine_height(const IntVec& x) const;

    /// Same decomposition with (nB, nl).
    GramForm scaled(long long n) const;

    /// U^T B U (and l U) for an integer change of basis U.
    GramForm transformed(const Matrix& u) const;

    /// Diagonal of B = L D L^T.
    const RatVec& ldl_diagonal() const { return diag_; }
    /// Unit lower-triangular L, row-major.
    const std::vector<RatVec>& ldl_lower() const { return lower_; }

    bool operator==(const GramForm& other) const {
        return gram_ == other.gram_ && linear_ == other.linear_;
    }

private:
    Matrix gram_;
    IntVec linear_;
    RatVec diag_;
    std::vector<RatVec> lower_;
};

/// Lattice points x with B(x - center, x - center) <= radius_sq, in lexicographic order.
std::vector<IntVec> enumerate_ellipsoid(const GramForm& form, const RatVec& center, const Rational& radius_sq);

/// Minimal B-distance^2 from center to the lattice together with every point attaining it.
struct NearestPoints {
    Rational distance_sq;
    std::vector<IntVec> points;
};

NearestPoints nearest_points(const GramForm& form, const RatVec& center);

}  // namespace sqav
