#include "llip/extension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace llip {

const char* to_string(ExtensionMethod m) {
    switch (m) {
        case ExtensionMethod::mcshane: return "mcshane";
        case ExtensionMethod::whitney: return "whitney";
        case ExtensionMethod::midpoint: return "midpoint";
    }
    return "unknown";
}

ExtensionMethod extension_method_from_string(const std::string& s) {
    if (s == "mcshane") return ExtensionMethod::mcshane;
    if (s == "whitney") return ExtensionMethod::whitney;
    if (s == "midpoint") return ExtensionMethod::midpoint;
    fail(errc::bad_input, "unknown extension method '" + s + "'");
}

namespace {

void check_spec(const ExtensionSpec& spec, const GridFunction& f) {
    if (spec.source.samples.empty()) fail(errc::bad_input, "empty sample source");
    check_on_grid(spec.phi, spec.source.grid);
    check_on_grid(f, spec.source.grid);
    for (std::size_t w = 0; w < spec.phi.size(); ++w)
        if (spec.phi.values[w] < 0.0)
            fail_at(errc::negative_bound, "bound function must be nonnegative", w);
}

// Both envelopes at one point. Samples whose abscissa coincides with f(w)
// exactly contribute the interpolating term with no arithmetic, which keeps
// extend(spec, g) == T(g) floating-exact for g in S.
struct PointEnvelopes {
    double lower;  // mcshane
    double upper;  // whitney
};

PointEnvelopes envelopes_at(const ExtensionSpec& spec, const GridFunction& f, std::size_t w) {
    const double fw = f.values[w];
    const double pw = spec.phi.values[w];
    const double inf = std::numeric_limits<double>::infinity();
    double lo = -inf, hi = inf;
    double clo = inf, chi = -inf;
    bool coincident = false;
    for (const auto& [g, Tg] : spec.source.samples) {
        double d = std::abs(g.values[w] - fw);
        double y = Tg.values[w];
        if (d == 0.0) {
            coincident = true;
            clo = std::min(clo, y);
            chi = std::max(chi, y);
        } else {
            lo = std::max(lo, y - pw * d);
            hi = std::min(hi, y + pw * d);
        }
    }
    if (coincident) return {chi, clo};
    return {lo, hi};
}

}  // namespace

GridFunction extend(const ExtensionSpec& spec, const GridFunction& f) {
    check_spec(spec, f);
    GridFunction out{f.grid, std::vector<double>(f.size())};
    for (std::size_t w = 0; w < f.size(); ++w) {
        auto [m, wh] = envelopes_at(spec, f, w);
        switch (spec.method) {
            case ExtensionMethod::mcshane: out.values[w] = m; break;
            case ExtensionMethod::whitney: out.values[w] = wh; break;
            case ExtensionMethod::midpoint: out.values[w] = 0.5 * (m + wh); break;
        }
    }
    return out;
}

GridFunction extension_gap(const ExtensionSpec& spec, const GridFunction& f) {
    check_spec(spec, f);
    GridFunction out{f.grid, std::vector<double>(f.size())};
    for (std::size_t w = 0; w < f.size(); ++w) {
        auto [m, wh] = envelopes_at(spec, f, w);
        out.values[w] = wh - m;
    }
    return out;
}

ExtensionDiagnostics extend_and_diagnose(const ExtensionSpec& spec, const GridFunction& f,
                                         double adjacency_radius, double threshold,
                                         double threshold_factor) {
    ExtensionDiagnostics diag;
    diag.extension = extend(spec, f);
    double radius = adjacency_radius > 0.0
                        ? adjacency_radius
                        : 2.5 * spec.source.grid->median_spacing();
    diag.continuity = continuity_report(diag.extension, radius, threshold, threshold_factor);

    // Re-verify the pointwise inequality over S augmented with (f, Tf).
    SampleOperator augmented = spec.source;
    bool already_sampled = false;
    for (const auto& [g, Tg] : augmented.samples)
        if (g.values == f.values) {
            already_sampled = true;
            break;
        }
    if (!already_sampled) augmented.samples.emplace_back(f, diag.extension);
    diag.bound = verify_bound(augmented, spec.phi, 1e-12, radius, threshold, threshold_factor);
    return diag;
}

}  // namespace llip
