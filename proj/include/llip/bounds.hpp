#pragma once

#include <span>
#include <string>
#include <utility>

#include "llip/operators.hpp"

namespace llip {

/// A candidate bound function together with the worst residual of the
/// pointwise Lipschitz inequality over the checked pairs and a continuity
/// diagnostic.
struct BoundReport {
    GridFunction phi;
    double max_violation = 0.0;
    ContinuityReport continuity;
    std::string source;
};

/// Pointwise |Tf - Tg| / |f - g|, set to 0 wherever |f - g| <= zero_tol.
GridFunction ratio_function(const OperatorRep& T, const GridFunction& f, const GridFunction& g,
                            double zero_tol = 1e-12);

/// Pointwise supremum of the ratio functions over all sample pairs: the
/// minimal bound function of the sampled operator. May be discontinuous.
BoundReport minimal_envelope(const SampleOperator& T, double zero_tol = 1e-12,
                             double adjacency_radius = -1.0, double threshold = -1.0,
                             double threshold_factor = 50.0);

/// Constant bound Q = max of the minimal envelope.
BoundReport constant_bound(const SampleOperator& T, double zero_tol = 1e-12,
                           double adjacency_radius = -1.0, double threshold = -1.0,
                           double threshold_factor = 50.0);

/// Pointwise-least L-Lipschitz majorant of phi_min on the grid metric:
/// w -> max_k (phi_min(k) - L*d(w,k)). L = 0 reproduces the constant bound.
GridFunction lipschitz_majorant(const GridFunction& phi_min, double L);

/// Worst residual max over pairs and points of |Tf(w)-Tg(w)| - phi(w)|f(w)-g(w)|,
/// clamped at 0.
BoundReport verify_bound(const SampleOperator& T, const GridFunction& phi,
                         double zero_tol = 1e-12, double adjacency_radius = -1.0,
                         double threshold = -1.0, double threshold_factor = 50.0);

/// Exact for superposition / tensor / multiplication representations (max
/// over w of the slice Lipschitz constant); a certified lower bound for a
/// SampleOperator (sup of the minimal envelope).
double llip_norm(const OperatorRep& T);

/// max over probe pairs of ||Tf-Tg||_inf / ||f-g||_inf. Always <= llip_norm
/// for superposition backends.
double lip_norm_estimate(const OperatorRep& T,
                         std::span<const std::pair<GridFunction, GridFunction>> probes);

/// Constant-probe pair (r, s) straddling the max-slope piece of the argmax
/// slice; with it lip_norm_estimate attains llip_norm.
std::pair<double, double> witness_probe(const SuperpositionField& T);

}  // namespace llip
