#pragma once

#include "sqav/form_spec.hpp"

#include <string>

namespace sqav {

struct VerifyResult {
    std::string json;
    bool passed = false;
};

/// Star cells, face counts and quotient classes; `verify` runs the cross-checks.
std::string star_report(const FormSpec& spec, bool verify);

/**
 * Every checkable statement for one form: cohomology, h^0(L^d) for d <= depth,
 * very ampleness, base change and the preset expectations. Forms above the
 * rank limit are handled by sampling maximal cells.
 */
VerifyResult verify_report(const FormSpec& spec, long long depth);

/// Theta basis classes for degree d.
std::string theta_report(const FormSpec& spec, long long d);

/// Cell-by-cell lattice data, primitive and relevant vectors, strata and multiplicities.
std::string classify_report(const FormSpec& spec);

/// Rank-2 tiling picture; throws InvalidArgument for other ranks.
std::string tiling_svg(const FormSpec& spec);

}  // namespace sqav
