#include "sqav/degeneration.hpp"

namespace sqav {

namespace {

Rational power(const Rational& q, long long e) {
    Rational base = e < 0 ? Rational(1) / q : q;
    unsigned long long n = e < 0 ? -static_cast<unsigned long long>(e) : e;
    Rational out = 1;
    while (n) {
        if (n & 1) out *= base;
        base *= base;
        n >>= 1;
    }
    return out;
}

}  // namespace

DegenData::DegenData(GramForm form, RatVec a0_basis, std::vector<RatVec> b0_matrix, bool base_change_done)
    : form_(std::move(form)),
      a0_basis_(std::move(a0_basis)),
      b0_(std::move(b0_matrix)),
      base_change_done_(base_change_done),
      cache_(std::make_shared<Cache>()) {
    const std::size_t r = form_.rank();
    if (a0_basis_.empty()) a0_basis_.assign(r, Rational(1));
    if (b0_.empty()) b0_.assign(r, RatVec(r, Rational(1)));
    if (a0_basis_.size() != r) throw InvalidArgument("a0 needs one value per basis vector");
    if (b0_.size() != r) throw InvalidArgument("b0 must be an r x r matrix");
    for (const auto& q : a0_basis_)
        if (q == 0) throw InvalidArgument("a0 values must be nonzero");
    for (std::size_t i = 0; i < r; ++i) {
        if (b0_[i].size() != r) throw InvalidArgument("b0 must be an r x r matrix");
        for (std::size_t j = 0; j < r; ++j) {
            if (b0_[i][j] == 0) throw InvalidArgument("b0 values must be nonzero");
            if (b0_[i][j] != b0_[j][i]) throw InvalidArgument("b0 must be symmetric");
        }
    }
}

Rational DegenData::a0(const IntVec& x) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->a0.find(x);
        if (it != cache_->a0.end()) return it->second;
    }
    const std::size_t r = form_.rank();
    Rational v = 1;
    for (std::size_t i = 0; i < r; ++i) {
        v *= power(a0_basis_[i], x[i]);
        v *= power(b0_[i][i], x[i] * (x[i] - 1) / 2);
        for (std::size_t j = i + 1; j < r; ++j) v *= power(b0_[i][j], x[i] * x[j]);
    }
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->a0.emplace(x, v);
    return v;
}

Rational DegenData::b0(const IntVec& x, const IntVec& y) const {
    Rational v = 1;
    for (std::size_t i = 0; i < form_.rank(); ++i)
        for (std::size_t j = 0; j < form_.rank(); ++j)
            if (x[i] != 0 && y[j] != 0) v *= power(b0_[i][j], x[i] * y[j]);
    return v;
}

DegenData DegenData::base_changed(long long n) const { return DegenData(form_.scaled(n), a0_basis_, b0_, true); }

RingElement RingElement::monomial(IntVec base, IntVec x, Rational coeff) {
    RingElement e{std::move(base), {}};
    e.add(x, coeff);
    return e;
}

RingElement& RingElement::add(const IntVec& x, const Rational& coeff) {
    if (coeff == 0) return *this;
    auto [it, inserted] = terms.emplace(x, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
    return *this;
}

Rational affine_height(const DegenData& data, const IntVec& x) { return data.form().affine_height(x); }

RatVec dA_at_hole(const DegenData& data, const DelaunayCell& cell) {
    const std::size_t r = data.form().rank();
    if (cell.dim != static_cast<int>(r)) throw InvalidCell("dA_at_hole: cell is not maximal");
    RatVec out = data.form().apply(cell.hole);
    for (std::size_t i = 0; i < r; ++i) out[i] += Rational(data.form().linear()[i], 2);
    return out;
}

Integer multiplicity(const DegenData& data, const DelaunayCell& cell) {
    return common_denominator(dA_at_hole(data, cell));
}

Integer minimal_base_change(const DegenData& data, const StarComplex& star) {
    Integer n = 1;
    for (auto k : star.max_cells()) n = lcm(n, multiplicity(data, star.cells()[k]));
    return n;
}

Rational eta(const DegenData& data, const StarComplex& star, const IntVec& x, const IntVec& c) {
    const IntVec u = sub(x, c);
    for (std::size_t k = 0; k < star.max_cells().size(); ++k) {
        if (!star.max_cone(k).contains(u)) continue;
        const RatVec alpha = add(star.cells()[star.max_cells()[k]].hole, to_rat(c));
        Rational v = data.form().inner(alpha, u);
        long long lu = 0;
        for (std::size_t i = 0; i < u.size(); ++i) lu += data.form().linear()[i] * u[i];
        return v + Rational(lu, 2);
    }
    throw InvariantViolation("eta: no maximal cone contains " + to_string(u));
}

RingElement multiply_R0(const DegenData& data, const StarComplex& star, const RingElement& u,
                        const RingElement& v) {
    if (!data.base_change_done()) throw InvalidArgument("multiply_R0 requires the base change to be done");
    if (u.base != v.base) throw InvalidArgument("multiply_R0: elements live over different base vertices");
    RingElement out{u.base, {}};
    for (const auto& [x, cx] : u.terms)
        for (const auto& [y, cy] : v.terms)
            if (cellmates(star, {x, y})) out.add(add(x, y), cx * cy);
    return out;
}

RingElement y_action(const DegenData& data, const IntVec& y, const RingElement& u) {
    RingElement out{add(u.base, y), {}};
    for (const auto& [x, c] : u.terms) out.add(x, c * data.b0(y, x));
    return out;
}

RingElement theta_restriction(const DegenData& data, const StarComplex& star, const IntVec& c) {
    RingElement out{c, {}};
    const Rational ac = data.a0(c);
    for (const auto& x : star.lattice_points()) out.add(x, data.a0(add(x, c)) / ac);
    return out;
}

}  // namespace sqav
