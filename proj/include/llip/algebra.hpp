#pragma once

#include <cstddef>

#include "llip/operators.hpp"

namespace llip {

/// The unit of the composition algebra: every slice is the identity on R.
SuperpositionField identity_field(const GridPtr& grid);

/// Slice-wise exact composition (outer o inner)(f)(w) = outer_w(inner_w(f(w))).
SuperpositionField compose(const SuperpositionField& outer, const SuperpositionField& inner,
                           std::size_t max_breakpoints = 10000);

struct SubmultReport {
    bool pointwise_ok = true;
    bool global_ok = true;
    std::size_t worst_point = 0;  // argmax of the pointwise excess
    double worst_excess = 0.0;    // composed slice lip minus the product, at worst_point
};

/// Checks Lip(outer_w o inner_w) <= Lip(outer_w)*Lip(inner_w) per point and
/// the analogous global norm inequality, to tolerance tol.
SubmultReport submultiplicativity_check(const SuperpositionField& outer,
                                        const SuperpositionField& inner, double tol = 1e-12);

}  // namespace llip
