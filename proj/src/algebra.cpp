#include "llip/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace llip {

SuperpositionField identity_field(const GridPtr& grid) {
    return SuperpositionField{grid, std::vector<ScalarPWL>(grid->size(), ScalarPWL::identity())};
}

SuperpositionField compose(const SuperpositionField& outer, const SuperpositionField& inner,
                           std::size_t max_breakpoints) {
    if (outer.grid->id() != inner.grid->id())
        fail(errc::grid_mismatch, "composition needs a shared grid");
    std::vector<ScalarPWL> slices;
    slices.reserve(outer.slices.size());
    for (std::size_t w = 0; w < outer.slices.size(); ++w)
        slices.push_back(compose(outer.slices[w], inner.slices[w], max_breakpoints));
    return SuperpositionField{outer.grid, std::move(slices)};
}

SubmultReport submultiplicativity_check(const SuperpositionField& outer,
                                        const SuperpositionField& inner, double tol) {
    if (outer.grid->id() != inner.grid->id())
        fail(errc::grid_mismatch, "submultiplicativity check needs a shared grid");
    SubmultReport rep;
    double lip2 = 0.0, lip1 = 0.0, lipc = 0.0;
    for (std::size_t w = 0; w < outer.slices.size(); ++w) {
        double l2 = outer.slices[w].lip_constant();
        double l1 = inner.slices[w].lip_constant();
        double lc = composed_lip_constant(outer.slices[w], inner.slices[w]);
        double excess = lc - l2 * l1;
        if (excess > rep.worst_excess) {
            rep.worst_excess = excess;
            rep.worst_point = w;
        }
        if (excess > tol) rep.pointwise_ok = false;
        lip2 = std::max(lip2, l2);
        lip1 = std::max(lip1, l1);
        lipc = std::max(lipc, lc);
    }
    rep.global_ok = lipc <= lip2 * lip1 + tol;
    return rep;
}

}  // namespace llip
