#pragma once

#include "sqav/degeneration.hpp"
#include "sqav/periodic_complex.hpp"

#include <cstdint>
#include <string>

namespace sqav {

/// Binomial coefficient C(n, k) (0 outside 0 <= k <= n).
Integer binomial(long long n, long long k);

/// sum over p + q = i of C(r, p) C(a, q), for i = 0 .. r + a.
std::vector<Integer> hodge_numbers(std::size_t rank, std::size_t abelian_rank);

struct MaximalClass {
    std::vector<IntVec> vertices;  // canonical representative mod X
    Integer multiplicity;
};

struct StrataReport {
    std::vector<std::size_t> class_counts;  // Delaunay classes mod X per dimension
    std::size_t kissing_number = 0;         // maximal cells at a vertex
    std::size_t components = 0;             // maximal classes mod X
    std::vector<MaximalClass> maximal_classes;
    bool reduced = false;
    std::size_t abelian_rank = 0;
    std::vector<Integer> hodge;  // h^i(O) including the abelian part
};

StrataReport strata_inventory(const StarComplex& star, const DegenData& data, std::size_t abelian_rank = 0);

struct ThetaEntry {
    RatVec z;
    std::vector<IntVec> minimal_cell;
    int cell_dim = 0;
    std::size_t support_size = 0;  // number of Delaunay cells containing z
};

struct ThetaBasisReport {
    long long degree = 1;
    std::vector<ThetaEntry> entries;
    std::size_t total = 0;
    Integer total_with_abelian;  // d^(r + a)
};

ThetaBasisReport theta_basis(const StarComplex& star, long long d, std::size_t abelian_rank = 0);

struct VeryAmpleReport {
    long long degree = 1;
    bool cond_i = false;    // Prim lies in r Star(0)
    bool cond_ii = false;   // interior (1/d)-point differences generate each cell's lattice
    bool cond_iii = false;  // (Star(0) - Star(0)) meets (2 + eps)X only in 0
    std::vector<std::string> witnesses;
};

bool primitive_in_scaled_star(const StarComplex& star, std::vector<std::string>* witnesses = nullptr);
bool differences_generate(const StarComplex& star, long long d, std::vector<std::string>* witnesses = nullptr);
bool star_differences_avoid(const StarComplex& star, const Rational& epsilon,
                            std::vector<std::string>* witnesses = nullptr);

VeryAmpleReport very_ample_check(const StarComplex& star, long long d);

struct SampledCell {
    RatVec start;
    DelaunayCell cell;
    Integer index;
    Integer nilpotency;
    Integer multiplicity;
    bool dA_integral = false;
};

struct SampleReport {
    std::vector<SampledCell> samples;
    Integer base_change;  // lcm of sampled multiplicities
};

/// Maximal cells reached from `count` random rational points; reproducible from `seed`.
SampleReport sample_maximal_cells(const DegenData& data, std::size_t count, std::uint64_t seed);

struct Check {
    std::string id;
    std::string statement;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct ExampleReport {
    std::string preset;
    std::vector<Check> checks;
    bool passed() const;
};

/// Full pipeline for dim1, dim2-square, dim2-hex or e8-sample against stored expectations.
ExampleReport example_report(const std::string& preset);

}  // namespace sqav
