#include "llip/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace llip {

namespace {

double default_radius(const GridPtr& grid, double adjacency_radius) {
    return adjacency_radius > 0.0 ? adjacency_radius : 2.5 * grid->median_spacing();
}

GridFunction pairwise_envelope(const SampleOperator& T, double zero_tol) {
    GridFunction phi = constant_function(T.grid, 0.0);
    for (std::size_t i = 0; i < T.samples.size(); ++i)
        for (std::size_t j = i + 1; j < T.samples.size(); ++j) {
            const auto& f = T.samples[i].first;
            const auto& g = T.samples[j].first;
            const auto& Tf = T.samples[i].second;
            const auto& Tg = T.samples[j].second;
            for (std::size_t w = 0; w < phi.size(); ++w) {
                double d = std::abs(f.values[w] - g.values[w]);
                if (d <= zero_tol) continue;
                double q = std::abs(Tf.values[w] - Tg.values[w]) / d;
                phi.values[w] = std::max(phi.values[w], q);
            }
        }
    return phi;
}

}  // namespace

GridFunction ratio_function(const OperatorRep& T, const GridFunction& f, const GridFunction& g,
                            double zero_tol) {
    check_same_grid(f, g);
    GridFunction Tf = eval(T, f);
    GridFunction Tg = eval(T, g);
    GridFunction out{f.grid, std::vector<double>(f.size())};
    for (std::size_t w = 0; w < f.size(); ++w) {
        double d = std::abs(f.values[w] - g.values[w]);
        out.values[w] = d <= zero_tol ? 0.0 : std::abs(Tf.values[w] - Tg.values[w]) / d;
    }
    return out;
}

BoundReport minimal_envelope(const SampleOperator& T, double zero_tol, double adjacency_radius,
                             double threshold, double threshold_factor) {
    if (T.samples.size() < 2)
        fail(errc::insufficient_samples, "minimal envelope needs at least 2 samples");
    BoundReport rep;
    rep.phi = pairwise_envelope(T, zero_tol);
    rep.max_violation = 0.0;
    rep.continuity = continuity_report(rep.phi, default_radius(T.grid, adjacency_radius), threshold,
                                     threshold_factor);
    rep.source = "minimal-envelope";
    return rep;
}

BoundReport constant_bound(const SampleOperator& T, double zero_tol, double adjacency_radius,
                           double threshold, double threshold_factor) {
    if (T.samples.size() < 2)
        fail(errc::insufficient_samples, "constant bound needs at least 2 samples");
    GridFunction env = pairwise_envelope(T, zero_tol);
    double q = *std::max_element(env.values.begin(), env.values.end());
    BoundReport rep;
    rep.phi = constant_function(T.grid, q);
    rep.max_violation = 0.0;
    rep.continuity = continuity_report(rep.phi, default_radius(T.grid, adjacency_radius), threshold,
                                     threshold_factor);
    rep.source = "constant";
    return rep;
}

GridFunction lipschitz_majorant(const GridFunction& phi_min, double L) {
    if (L < 0.0) fail(errc::negative_l, "majorant needs L >= 0");
    const CompactGrid& g = *phi_min.grid;
    GridFunction out{phi_min.grid, std::vector<double>(phi_min.size())};
    for (std::size_t w = 0; w < g.size(); ++w) {
        double m = phi_min.values[w];
        for (std::size_t k = 0; k < g.size(); ++k)
            m = std::max(m, phi_min.values[k] - L * g.distance(w, k));
        out.values[w] = m;
    }
    return out;
}

BoundReport verify_bound(const SampleOperator& T, const GridFunction& phi, double zero_tol,
                         double adjacency_radius, double threshold, double threshold_factor) {
    check_on_grid(phi, T.grid);
    for (std::size_t w = 0; w < phi.size(); ++w)
        if (phi.values[w] < 0.0)
            fail_at(errc::negative_bound, "bound function must be nonnegative", w);
    (void)zero_tol;  // the residual form needs no coincidence rule
    double worst = 0.0;
    for (std::size_t i = 0; i < T.samples.size(); ++i)
        for (std::size_t j = i + 1; j < T.samples.size(); ++j)
            for (std::size_t w = 0; w < phi.size(); ++w) {
                double lhs = std::abs(T.samples[i].second.values[w] -
                                      T.samples[j].second.values[w]);
                double rhs = phi.values[w] * std::abs(T.samples[i].first.values[w] -
                                                      T.samples[j].first.values[w]);
                worst = std::max(worst, lhs - rhs);
            }
    BoundReport rep;
    rep.phi = phi;
    rep.max_violation = worst;
    rep.continuity = continuity_report(phi, default_radius(T.grid, adjacency_radius), threshold,
                                     threshold_factor);
    rep.source = "user";
    return rep;
}

double llip_norm(const OperatorRep& T) {
    struct Visitor {
        double operator()(const SuperpositionField& f) const {
            double m = 0.0;
            for (const auto& s : f.slices) m = std::max(m, s.lip_constant());
            return m;
        }
        double operator()(const TensorOperator& t) const {
            return (*this)(tensor_to_superposition(t));
        }
        double operator()(const MultiplicationOperator& mo) const { return sup_norm(mo.h); }
        double operator()(const SampleOperator& s) const {
            // Certified lower bound: a finite sample witnesses the norm from below.
            if (s.samples.size() < 2) return 0.0;
            GridFunction env = pairwise_envelope(s, 1e-12);
            return *std::max_element(env.values.begin(), env.values.end());
        }
    };
    return std::visit(Visitor{}, T);
}

double lip_norm_estimate(const OperatorRep& T,
                         std::span<const std::pair<GridFunction, GridFunction>> probes) {
    double best = 0.0;
    for (const auto& [f, g] : probes) {
        check_same_grid(f, g);
        double den = 0.0;
        for (std::size_t w = 0; w < f.size(); ++w)
            den = std::max(den, std::abs(f.values[w] - g.values[w]));
        if (den == 0.0) fail(errc::degenerate_probe, "probe pair coincides in sup norm");
        GridFunction Tf = eval(T, f);
        GridFunction Tg = eval(T, g);
        double num = 0.0;
        for (std::size_t w = 0; w < f.size(); ++w)
            num = std::max(num, std::abs(Tf.values[w] - Tg.values[w]));
        best = std::max(best, num / den);
    }
    return best;
}

std::pair<double, double> witness_probe(const SuperpositionField& T) {
    // Argmax slice, lowest index on ties.
    std::size_t w0 = 0;
    double lip = T.slices[0].lip_constant();
    for (std::size_t w = 1; w < T.slices.size(); ++w) {
        double l = T.slices[w].lip_constant();
        if (l > lip) {
            lip = l;
            w0 = w;
        }
    }
    const ScalarPWL& s = T.slices[w0];
    const auto& bp = s.breakpoints();
    if (std::abs(s.left_slope()) == lip) return {bp.front() - 1.0, bp.front()};
    for (std::size_t i = 0; i + 1 < bp.size(); ++i)
        if (std::abs(s.segment_slope(i)) == lip) return {bp[i], bp[i + 1]};
    return {bp.back(), bp.back() + 1.0};
}

}  // namespace llip
