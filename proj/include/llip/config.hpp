#pragma once

#include <cstddef>
#include <cstdint>

namespace llip {

struct Config {
    double zero_tol = 1e-12;             // decides f(w) == g(w)
    double consistency_tol = 1e-9;       // diagonality check in sample_to_superposition
    double continuity_threshold_factor = 50.0;  // times the median difference quotient
    double adjacency_radius_factor = 2.5;       // times the median grid spacing
    std::size_t max_breakpoints = 10000;        // per composed slice
    std::uint64_t seed = 0;

    double adjacency_radius_for(double median_spacing) const {
        return adjacency_radius_factor * median_spacing;
    }
};

}  // namespace llip
