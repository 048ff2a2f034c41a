#pragma once

#include "sqav/exact_linalg.hpp"
#include "sqav/gram_form.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace sqav {

class InvalidCell : public std::runtime_error {
public:
    explicit InvalidCell(const std::string& what) : std::runtime_error(what) {}
};

class InvariantViolation : public std::runtime_error {
public:
    explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

class RankLimitExceeded : public std::runtime_error {
public:
    explicit RankLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

/**
 * A Delaunay cell: the convex hull of all lattice points nearest to some
 * centre. `hole` is a centre defining the cell (the unique one when the cell
 * is maximal) and `radius_sq` the squared B-distance from it to every vertex.
 * Two cells are equal when their vertex sets are.
 */
struct DelaunayCell {
    std::vector<IntVec> vertices;  // sorted lexicographically
    int dim = 0;
    RatVec hole;
    Rational radius_sq;

    bool operator==(const DelaunayCell& other) const { return vertices == other.vertices; }
    bool contains_vertex(const IntVec& x) const;
    /// Nonzero vertices; the cell must contain the origin.
    std::vector<IntVec> delaunay_vectors() const;
    DelaunayCell translated(const IntVec& t) const;
    /// Translate so that the lexicographically least vertex sits at the origin.
    DelaunayCell anchored() const;
};

struct Hole {
    RatVec center;
    Rational radius_sq;
};

/**
 * Circumcentre of the vertices inside their affine span, solving
 * 2B(a - c, x - c) = B(x - c, x - c) for every vertex x with base vertex c.
 * Throws InvalidCell when the vertices are not cocircular.
 */
Hole hole_of(const GramForm& form, const std::vector<IntVec>& vertices);

/// Convex hull of all lattice points nearest to alpha.
DelaunayCell delaunay_cell_at(const GramForm& form, const RatVec& alpha);

/**
 * Relevant vectors of V(0): v != 0 is relevant iff +-v are the only minima of
 * B on the coset v + 2X. Sorted, closed under negation.
 */
std::vector<IntVec> relevant_vectors(const GramForm& form);

/**
 * Starting from `start`, slide the centre inside Voronoi regions until the
 * nearest set becomes full dimensional, and return that maximal cell.
 * Directions are drawn from `seed`, so the result is reproducible.
 */
DelaunayCell walk_to_maximal_cell(const GramForm& form, const RatVec& start, std::uint64_t seed);

/// Full-star rank cap: SQAV_RANK_LIMIT when set, otherwise 5.
std::size_t default_rank_limit();

struct StarOptions {
    /// Cross-check against the lifted-hull route (ranks <= 3) and assert cell invariants.
    bool verify = false;
    std::size_t rank_limit = default_rank_limit();
};

/**
 * All Delaunay cells containing the origin with their face relations: the
 * finite model of Del_B modulo translation.
 */
class StarComplex {
public:
    StarComplex(GramForm form, std::vector<DelaunayCell> cells);

    const GramForm& form() const { return form_; }
    std::size_t rank() const { return form_.rank(); }
    const std::vector<DelaunayCell>& cells() const { return cells_; }
    /// (i, j) with cells[i] a proper face of cells[j].
    const std::vector<std::pair<std::size_t, std::size_t>>& face_relations() const { return relations_; }
    const std::vector<std::size_t>& max_cells() const { return max_cells_; }

    std::optional<std::size_t> find(const std::vector<IntVec>& sorted_vertices) const;
    /// Proper faces of cell i that contain the origin.
    const std::vector<std::size_t>& faces_of(std::size_t i) const { return faces_[i]; }
    /// Cells properly containing cell i.
    const std::vector<std::size_t>& cofaces_of(std::size_t i) const { return cofaces_[i]; }

    /// Cone(0, sigma) of the k-th maximal cell.
    const Cone& max_cone(std::size_t k) const { return cones_[k]; }
    /// Polytope of the k-th maximal cell.
    const Polytope& max_polytope(std::size_t k) const { return polytopes_[k]; }

    /// Lattice points of |Star(0)|, sorted.
    std::vector<IntVec> lattice_points() const;
    /// Largest squared circumradius over maximal cells (the squared covering radius).
    Rational covering_radius_sq() const;

    /**
     * Codimension-one faces of an arbitrary Delaunay cell (any translate of a
     * star cell), as sorted vertex lists.
     */
    std::vector<std::vector<IntVec>> facets_of(const std::vector<IntVec>& vertices) const;

    /// Whether the point lies in |Star(0)|.
    bool covers(const RatVec& p) const;

private:
    GramForm form_;
    std::vector<DelaunayCell> cells_;
    std::map<std::vector<IntVec>, std::size_t> index_;
    std::vector<std::pair<std::size_t, std::size_t>> relations_;
    std::vector<std::vector<std::size_t>> faces_;
    std::vector<std::vector<std::size_t>> cofaces_;
    std::vector<std::size_t> max_cells_;
    std::vector<Cone> cones_;
    std::vector<Polytope> polytopes_;
};

/// Star via the vertices of V(0) (default production route).
StarComplex star_via_voronoi(const GramForm& form);
/// Star via the lower facets of the lifted points incident to (0, 0).
StarComplex star_via_lifting(const GramForm& form);
/// Star with rank cap and optional cross-validation.
StarComplex star(const GramForm& form, const StarOptions& options = {});

/// Star cells from the maximal cells containing 0: closure under intersection.
StarComplex star_from_maximal_cells(const GramForm& form, std::vector<std::vector<IntVec>> maximal);

struct VoronoiHalfspace {
    IntVec direction;  // alpha must satisfy B(alpha, direction) <= bound
    Rational bound;
    bool operator==(const VoronoiHalfspace&) const = default;
};

struct VoronoiCell {
    DelaunayCell dual_cell;
    std::vector<RatVec> vertices;  // holes of the maximal cells containing dual_cell, sorted
    std::vector<VoronoiHalfspace> halfspaces;
    int dim = 0;
};

/// Voronoi cell dual to a star cell. Throws InvalidCell when the cell is not in the star.
VoronoiCell voronoi_cell(const GramForm& form, const DelaunayCell& cell, const StarComplex& star);

// ---- locating points -----------------------------------------------------------------

/**
 * Vertices of the unique Delaunay cell containing z in its relative interior.
 * Found through polytope membership in translates of maximal star cells.
 */
std::vector<IntVec> minimal_cell_containing(const StarComplex& star, const RatVec& z);

/// All Delaunay cells (actual translates, sorted vertex lists) containing z.
std::vector<std::vector<IntVec>> cells_containing(const StarComplex& star, const RatVec& z);

// ---- classification ------------------------------------------------------------------

/// Hilbert basis (primitive lattice vectors) of a pointed cone.
std::vector<IntVec> primitive_vectors(const Cone& cone);
/// Union of the primitive vectors of Cone(0, sigma) over the star cells.
std::vector<IntVec> primitive_vectors(const StarComplex& star);

/// Some maximal cell's cone contains every x.
bool cellmates(const StarComplex& star, const std::vector<IntVec>& xs);

struct CellLatticeData {
    std::vector<Integer> smith_factors;  // nonzero factors of the Delaunay-vector matrix
    Integer index;                        // index of their span in X intersected with the cell's span
    Integer nilpotency;                   // exponent of that quotient group
};

/// Lattice data of a cell; a cell not containing the origin is first anchored.
CellLatticeData cell_lattice_data(const DelaunayCell& cell);
bool is_generating(const DelaunayCell& cell);
bool is_totally_generating(const DelaunayCell& cell);
Integer nilpotency(const DelaunayCell& cell);
/// lcm of nilpotencies over the maximal star cells.
Integer nilpotency_of_decomposition(const StarComplex& star);

}  // namespace sqav
