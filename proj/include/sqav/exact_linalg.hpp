#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqav {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Lattice element of X = Z^r.
using IntVec = std::vector<long long>;
/// Point of X_Q.
using RatVec = std::vector<Rational>;

class InvalidArgument : public std::runtime_error {
public:
    explicit InvalidArgument(const std::string& what) : std::runtime_error(what) {}
};

/** Dense matrix of exact rationals, row-major. */
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVec>& rows, std::size_t cols);
    static RatMatrix from_int_rows(const std::vector<IntVec>& rows, std::size_t cols);
    /// Matrix whose columns are the given integer vectors.
    static RatMatrix from_int_columns(const std::vector<IntVec>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatVec row(std::size_t i) const;
    RatMatrix transposed() const;
    RatVec operator*(const RatVec& v) const;

    bool operator==(const RatMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// ---- small vector helpers -------------------------------------------------

RatVec to_rat(const IntVec& v);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(long long k, const IntVec& v);
IntVec negate(const IntVec& v);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rational& k, const RatVec& v);
Rational dot(const RatVec& a, const RatVec& b);
Rational dot(const RatVec& a, const IntVec& b);
bool is_zero(const IntVec& v);
/// True when every coordinate is an integer.
bool is_integral(const RatVec& v);
/// Requires is_integral(v).
IntVec to_int(const RatVec& v);
/// Least common multiple of the coordinate denominators.
Integer common_denominator(const RatVec& v);
Integer lcm(const Integer& a, const Integer& b);
long long floor_to_ll(const Rational& q);
long long ceil_to_ll(const Rational& q);

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(const std::string& text);
/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

// ---- linear algebra -------------------------------------------------------

/**
 * Unique solution of M y = b, or nullopt when M lacks full column rank or the
 * system is inconsistent.
 */
std::optional<RatVec> solve_linear(const RatMatrix& m, const RatVec& b);

/// Exact rank over Q (rows are cleared to integers, then Bareiss elimination).
std::size_t rational_rank(const RatMatrix& m);

/// Basis of the right null space {y : M y = 0}, one vector per free column.
std::vector<RatVec> null_space(const RatMatrix& m);

/// Affine rank of a finite point set (-1 for the empty set).
int affine_rank(const std::vector<IntVec>& points);

struct SmithForm {
    /// min(rows, cols) diagonal entries, d_1 | d_2 | ..., zeros last.
    std::vector<Integer> factors;
    std::size_t rank = 0;
};

/// Smith normal form of an integer matrix (entries must be integral).
SmithForm smith_normal_form(const RatMatrix& m);
SmithForm smith_normal_form(const std::vector<IntVec>& rows, std::size_t cols);

// ---- exact LP --------------------------------------------------------------

/**
 * Phase-one simplex over Q with Bland's rule. Returns some y >= 0 with
 * A y = b, or nullopt when none exists.
 */
std::optional<RatVec> lp_feasible(const RatMatrix& a, const RatVec& b);

/// x is a nonnegative rational combination of the generators (exact LP).
bool cone_membership(const RatVec& x, const std::vector<IntVec>& generators);
bool cone_membership(const IntVec& x, const std::vector<IntVec>& generators);

/// x lies in the convex hull of the points (exact LP).
bool hull_membership(const RatVec& x, const std::vector<IntVec>& points);

/**
 * Polyhedral cone generated by finitely many lattice vectors, held in both
 * V- and H-representation. The H-representation lives inside the linear
 * span: `equations` cut out the span, `facets` are inward normals n with
 * n.x >= 0 on the cone.
 */
class Cone {
public:
    Cone() = default;
    Cone(std::vector<IntVec> generators, std::size_t ambient_dim);

    const std::vector<IntVec>& generators() const { return generators_; }
    std::size_t dim() const { return dim_; }
    const std::vector<RatVec>& equations() const { return equations_; }
    const std::vector<RatVec>& facets() const { return facets_; }

    bool contains(const RatVec& x) const;
    bool contains(const IntVec& x) const;

private:
    std::vector<IntVec> generators_;
    std::size_t ambient_ = 0;
    std::size_t dim_ = 0;
    std::vector<RatVec> equations_;
    std::vector<RatVec> facets_;
};

/**
 * Convex hull of lattice points with an H-representation relative to its
 * affine span: equations (n, c) with n.x == c and facets (n, c) with
 * n.x >= c.
 */
class Polytope {
public:
    struct Halfspace {
        RatVec normal;
        Rational offset;
    };

    Polytope() = default;
    Polytope(std::vector<IntVec> vertices, std::size_t ambient_dim);

    const std::vector<IntVec>& vertices() const { return vertices_; }
    std::size_t dim() const { return dim_; }
    const std::vector<Halfspace>& facets() const { return facets_; }

    bool contains(const RatVec& x) const;
    /// Inside the affine span and strictly inside every facet.
    bool relative_interior_contains(const RatVec& x) const;
    /// Vertices lying on every facet that is tight at x (x must be in the polytope).
    std::vector<IntVec> minimal_face_containing(const RatVec& x) const;

private:
    bool on_span(const RatVec& x) const;

    std::vector<IntVec> vertices_;
    std::size_t ambient_ = 0;
    std::size_t dim_ = 0;
    std::vector<Halfspace> equations_;
    std::vector<Halfspace> facets_;
};

// ---- lifted hulls ----------------------------------------------------------

struct LiftedPoint {
    IntVec x;
    Rational height;
};

/// Lower facet of a lifted point set: height(p) >= normal.p + offset, with equality on `incident`.
struct LowerFacet {
    RatVec normal;
    Rational offset;
    std::vector<std::size_t> incident;  // indices into the input, ascending
};

class DegenerateHull : public std::runtime_error {
public:
    explicit DegenerateHull(const std::string& what) : std::runtime_error(what) {}
};

/**
 * All lower facets of the convex hull of the lifted points, ordered by their
 * incidence lists. Non-simplicial facets are reported once with every
 * incident point. Throws DegenerateHull when the projected points do not
 * affinely span the ambient space.
 */
std::vector<LowerFacet> lower_hull(const std::vector<LiftedPoint>& points);

/// Lower facets incident to points[apex] only.
std::vector<LowerFacet> lower_hull_at(const std::vector<LiftedPoint>& points, std::size_t apex);

}  // namespace sqav
