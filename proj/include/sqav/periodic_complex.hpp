#pragma once

#include "sqav/delaunay.hpp"

namespace sqav {

using IntMatrix = std::vector<std::vector<long long>>;

/**
 * Oriented cell complex with integer boundary maps. cells[k] lists the
 * k-cells; boundary[k] (k >= 1) has one row per (k-1)-cell and one column
 * per k-cell. boundary[0] is empty.
 */
struct CellComplex {
    std::vector<std::vector<std::vector<IntVec>>> cells;
    std::vector<IntMatrix> boundary;

    std::vector<std::size_t> counts() const;
    long long euler_characteristic() const;
    bool is_chain_complex() const;
};

/// Del_B modulo dX; cells are represented with their least vertex in [0, d)^r.
struct QuotientComplex : CellComplex {
    long long period = 1;
};

struct CohomologyReport {
    std::vector<long long> dims;
    long long euler = 0;
};

/// Translate so the lexicographically least vertex has coordinates in [0, d).
std::vector<IntVec> canonical_representative(std::vector<IntVec> vertices, long long d);

/// Orientation frame of a cell: edges from the least vertex to the next affinely independent vertices.
std::vector<IntVec> orientation_frame(const std::vector<IntVec>& vertices);

/// Sign with which the facet's frame orientation agrees with the orientation it inherits from the cell.
int incidence_sign(const std::vector<IntVec>& cell, const std::vector<IntVec>& facet);

QuotientComplex quotient_complex(const StarComplex& star, long long d);

/// h^k = n_k - rank d_{k+1} - rank d_k over Q.
CohomologyReport cohomology_dims(const CellComplex& complex);

/// Cells of Del_B containing z, with the boundary maps restricted to them.
CellComplex link_subcomplex(const StarComplex& star, const RatVec& z);

/// Homology of the dual Voronoi face of a link: W^i = h_{r-i} of the link complex.
std::vector<long long> link_cohomology(const CellComplex& link, std::size_t rank);

struct H0Witness {
    RatVec z;                          // representative in [0, 1)^r
    std::vector<IntVec> minimal_cell;  // cell containing z in its relative interior
    std::vector<long long> link_cohomology;
};

struct H0Report {
    long long count = 0;
    std::vector<H0Witness> witnesses;
};

/// One contractible link per class of (1/d)X / X; throws InvariantViolation otherwise.
H0Report h0_Ld(const StarComplex& star, long long d);

/// Points k/d with k in [0, d)^r, lexicographic in k.
std::vector<RatVec> torsion_points(std::size_t rank, long long d);

}  // namespace sqav
