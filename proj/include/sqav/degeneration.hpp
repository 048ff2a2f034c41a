#pragma once

#include "sqav/delaunay.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace sqav {

/**
 * Degeneration data: the form (B, l) giving A(x) = (B(x,x) + l.x)/2 and the
 * unit parts a_0, b_0 with values in Q*. a_0 is stored on the standard basis
 * and extended by a_0(x+y) = a_0(x) a_0(y) b_0(x,y); b_0 is bilinear.
 */
class DegenData {
public:
    explicit DegenData(GramForm form, RatVec a0_basis = {}, std::vector<RatVec> b0_matrix = {},
                       bool base_change_done = false);

    const GramForm& form() const { return form_; }
    const RatVec& a0_basis() const { return a0_basis_; }
    const std::vector<RatVec>& b0_matrix() const { return b0_; }
    bool base_change_done() const { return base_change_done_; }

    Rational a0(const IntVec& x) const;
    Rational b0(const IntVec& x, const IntVec& y) const;

    /// (nB, nl) with the same units; marks the base change as done.
    DegenData base_changed(long long n) const;

private:
    struct Cache {
        std::mutex mutex;
        std::map<IntVec, Rational> a0;
    };

    GramForm form_;
    RatVec a0_basis_;
    std::vector<RatVec> b0_;
    bool base_change_done_;
    std::shared_ptr<Cache> cache_;
};

/// A finite combination of monomials zeta_{x,c} over one base vertex c.
struct RingElement {
    IntVec base;
    std::map<IntVec, Rational> terms;  // no zero coefficients

    static RingElement monomial(IntVec base, IntVec x, Rational coeff = 1);
    bool operator==(const RingElement&) const = default;
    RingElement& add(const IntVec& x, const Rational& coeff);
};

Rational affine_height(const DegenData& data, const IntVec& x);

/// Coefficients of x -> B(alpha, x) + l.x/2 at the hole of a maximal cell.
RatVec dA_at_hole(const DegenData& data, const DelaunayCell& cell);

/// Least common denominator of dA at the hole.
Integer multiplicity(const DegenData& data, const DelaunayCell& cell);

/// lcm of the multiplicities of the maximal star cells.
Integer minimal_base_change(const DegenData& data, const StarComplex& star);

/**
 * eta(x, c): the value at x - c of dA(alpha(sigma)) for a maximal cell sigma
 * containing c whose cone at c contains x.
 */
Rational eta(const DegenData& data, const StarComplex& star, const IntVec& x, const IntVec& c);

/// Product in R_0(c): zeta_x zeta_y = zeta_{x+y} for cellmates, 0 otherwise.
RingElement multiply_R0(const DegenData& data, const StarComplex& star, const RingElement& u,
                        const RingElement& v);

/// S*_y: zeta_{x,c} -> b_0(y,x) zeta_{x,c+y}.
RingElement y_action(const DegenData& data, const IntVec& y, const RingElement& u);

/// Restriction of the theta function to the chart at c, normalised by xi_c.
RingElement theta_restriction(const DegenData& data, const StarComplex& star, const IntVec& c);

}  // namespace sqav
