#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "llip/error.hpp"

namespace llip {

/// Piecewise-linear real function of a real variable with finitely many
/// breakpoints; the concrete representative of Lip(R). The Lipschitz
/// constant is exact: the largest absolute slope over segments and the two
/// extrapolation rays.
class ScalarPWL {
public:
    ScalarPWL(std::vector<double> breakpoints, std::vector<double> values,
              double left_slope, double right_slope);

    static ScalarPWL constant(double c);
    static ScalarPWL identity();

    double operator()(double r) const;

    double lip_constant() const;

    std::size_t size() const { return bp_.size(); }
    const std::vector<double>& breakpoints() const { return bp_; }
    const std::vector<double>& values() const { return val_; }
    double left_slope() const { return left_; }
    double right_slope() const { return right_; }

    /// Slope of segment [bp_[i], bp_[i+1]].
    double segment_slope(std::size_t i) const;
    /// Slope of the linear piece immediately left of r (left ray for r <= first).
    double slope_below(double r) const;
    /// Slope of the linear piece immediately right of r (right ray for r >= last).
    double slope_above(double r) const;

    /// Drop breakpoints whose incoming and outgoing slopes agree within tol.
    ScalarPWL pruned(double tol = 1e-12) const;

private:
    std::vector<double> bp_;
    std::vector<double> val_;
    double left_;
    double right_;
};

/// Sum of coeffs[i] * parts[i] over the union of breakpoints. Exact up to
/// floating rounding.
ScalarPWL weighted_sum(std::span<const ScalarPWL> parts, std::span<const double> coeffs);

/// One-dimensional McShane envelope max_j (ys[j] - L*|xs[j] - r|) of the
/// scattered data (xs, ys) with Lipschitz constant L >= 0. xs must be
/// strictly increasing. Extrapolates with slopes +L / -L, so the global
/// Lipschitz constant is preserved.
ScalarPWL mcshane_envelope(std::span<const double> xs, std::span<const double> ys, double L);

/// Exact Lipschitz constant of outer(inner(.)), computed as the largest
/// |outer-piece slope * inner-piece slope| over piece pairs whose intervals
/// meet. Avoids the divided-difference rounding of the composed PWL, so
/// submultiplicativity is assertable to 1e-12.
double composed_lip_constant(const ScalarPWL& outer, const ScalarPWL& inner);

/// Exact composition outer(inner(.)): breakpoints are inner's breakpoints
/// united with the preimages of outer's breakpoints under each monotone
/// piece of inner. Throws breakpoint_overflow past max_breakpoints.
ScalarPWL compose(const ScalarPWL& outer, const ScalarPWL& inner,
                  std::size_t max_breakpoints = 10000);

}  // namespace llip
