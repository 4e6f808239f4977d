#pragma once

#include <string>

#include "llip/bounds.hpp"
#include "llip/operators.hpp"

namespace llip {

enum class ExtensionMethod { mcshane, whitney, midpoint };

const char* to_string(ExtensionMethod m);
ExtensionMethod extension_method_from_string(const std::string& s);

struct ExtensionSpec {
    ExtensionMethod method = ExtensionMethod::mcshane;
    GridFunction phi;  // bound function, >= 0, on the source grid
    SampleOperator source;
};

/// Pointwise extension of the sampled operator to an arbitrary grid function:
///   mcshane:  max_g Tg(w) - phi(w)|g(w) - f(w)|
///   whitney:  min_g Tg(w) + phi(w)|g(w) - f(w)|
///   midpoint: their mean.
/// Samples coincident with f at w pin the value there, so the extension
/// interpolates its data exactly.
GridFunction extend(const ExtensionSpec& spec, const GridFunction& f);

struct ExtensionDiagnostics {
    GridFunction extension;
    ContinuityReport continuity;
    BoundReport bound;  // pointwise-inequality residuals over the augmented samples
};

ExtensionDiagnostics extend_and_diagnose(const ExtensionSpec& spec, const GridFunction& f,
                                         double adjacency_radius = -1.0,
                                         double threshold = -1.0,
                                         double threshold_factor = 50.0);

/// Whitney minus McShane, pointwise. Nonnegative whenever phi is a valid
/// bound for the source; a negative value is the runtime signal that phi
/// was too small.
GridFunction extension_gap(const ExtensionSpec& spec, const GridFunction& f);

}  // namespace llip
