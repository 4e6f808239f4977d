#include "llip/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace llip {

const GridPtr& grid_of(const OperatorRep& op) {
    return std::visit([](const auto& o) -> const GridPtr& { return o.grid; }, op);
}

SampleOperator make_sample_operator(GridPtr grid,
                                    std::vector<std::pair<GridFunction, GridFunction>> samples) {
    if (samples.empty()) fail(errc::bad_input, "sample operator needs a non-empty sample list");
    for (const auto& [g, Tg] : samples) {
        check_on_grid(g, grid);
        check_on_grid(Tg, grid);
    }
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first.values == samples[j].first.values)
                fail(errc::bad_input, "duplicate sample argument g");
    return SampleOperator{std::move(grid), std::move(samples)};
}

SuperpositionField make_superposition_field(GridPtr grid, std::vector<ScalarPWL> slices) {
    if (slices.size() != grid->size())
        fail(errc::bad_input, "superposition field needs one slice per grid point");
    return SuperpositionField{std::move(grid), std::move(slices)};
}

TensorOperator make_tensor_operator(GridPtr grid,
                                    std::vector<std::pair<GridFunction, ScalarPWL>> terms) {
    if (terms.empty()) fail(errc::bad_input, "tensor operator needs a non-empty term list");
    for (const auto& [f, phi] : terms) check_on_grid(f, grid);
    return TensorOperator{std::move(grid), std::move(terms)};
}

MultiplicationOperator multiplication_operator(GridPtr grid, GridFunction h) {
    check_on_grid(h, grid);
    return MultiplicationOperator{std::move(grid), std::move(h)};
}

GridFunction eval(const SampleOperator& op, const GridFunction& f) {
    check_on_grid(f, op.grid);
    for (const auto& [g, Tg] : op.samples)
        if (g.values == f.values) return Tg;
    fail(errc::not_in_domain, "argument is not among the stored samples");
}

GridFunction eval(const SuperpositionField& op, const GridFunction& f) {
    check_on_grid(f, op.grid);
    GridFunction out{op.grid, std::vector<double>(f.size())};
    for (std::size_t w = 0; w < f.size(); ++w) out.values[w] = op.slices[w](f.values[w]);
    return out;
}

GridFunction eval(const TensorOperator& op, const GridFunction& f) {
    check_on_grid(f, op.grid);
    GridFunction out{op.grid, std::vector<double>(f.size(), 0.0)};
    for (std::size_t w = 0; w < f.size(); ++w)
        for (const auto& [fi, phi] : op.terms)
            out.values[w] += fi.values[w] * phi(f.values[w]);
    return out;
}

GridFunction eval(const MultiplicationOperator& op, const GridFunction& f) {
    check_on_grid(f, op.grid);
    GridFunction out{op.grid, std::vector<double>(f.size())};
    for (std::size_t w = 0; w < f.size(); ++w) out.values[w] = op.h.values[w] * f.values[w];
    return out;
}

GridFunction eval(const OperatorRep& op, const GridFunction& f) {
    return std::visit([&f](const auto& o) { return eval(o, f); }, op);
}

SuperpositionField saturating_operator(const GridPtr& grid, double k, double r_lo, double r_hi,
                                       std::size_t n_break) {
    if (!(k > 0.0)) fail(errc::invalid_k, "saturating operator needs k > 0");
    if (!(r_lo < r_hi)) fail(errc::invalid_range, "empty breakpoint range");
    if (n_break < 3) fail(errc::bad_input, "saturating operator needs n_break >= 3");

    // The slope of k/(k+|r|) peaks (1/k) at the point of the range closest
    // to 0; grade the breakpoints geometrically towards it so the chord
    // slopes approach the true constant.
    const double target = std::clamp(0.0, r_lo, r_hi);
    std::vector<double> bp{target};
    auto add_side = [&bp, target](double endpoint, std::size_t m) {
        double width = std::abs(endpoint - target);
        if (m == 0 || width == 0.0) return;
        double sign = endpoint > target ? 1.0 : -1.0;
        if (m == 1) {
            bp.push_back(endpoint);
            return;
        }
        double delta = std::min(1e-6 * width, width / static_cast<double>(m));
        double rho = std::pow(delta / width, 1.0 / static_cast<double>(m - 1));
        for (std::size_t j = 0; j + 1 < m; ++j)
            bp.push_back(target + sign * width * std::pow(rho, static_cast<double>(m - 1 - j)));
        bp.push_back(endpoint);
    };
    double w_left = target - r_lo, w_right = r_hi - target;
    std::size_t budget = n_break - 1;
    std::size_t m_left = 0, m_right = 0;
    if (w_left > 0.0 && w_right > 0.0) {
        m_left = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::llround(
                   static_cast<double>(budget) * w_left / (w_left + w_right))));
        m_left = std::min(m_left, budget - 1);
        m_right = budget - m_left;
    } else if (w_left > 0.0) {
        m_left = budget;
    } else {
        m_right = budget;
    }
    add_side(r_lo, m_left);
    add_side(r_hi, m_right);
    std::sort(bp.begin(), bp.end());

    std::vector<double> val(bp.size());
    for (std::size_t i = 0; i < bp.size(); ++i) val[i] = k / (k + std::abs(bp[i]));
    double ls = (val[1] - val[0]) / (bp[1] - bp[0]);
    double rs = (val[val.size() - 1] - val[val.size() - 2]) /
                (bp[bp.size() - 1] - bp[bp.size() - 2]);
    ScalarPWL slice(std::move(bp), std::move(val), ls, rs);
    return make_superposition_field(grid, std::vector<ScalarPWL>(grid->size(), slice));
}

SuperpositionField tensor_to_superposition(const TensorOperator& t) {
    std::vector<ScalarPWL> parts;
    parts.reserve(t.terms.size());
    for (const auto& [fi, phi] : t.terms) parts.push_back(phi);
    std::vector<ScalarPWL> slices;
    slices.reserve(t.grid->size());
    std::vector<double> coeffs(t.terms.size());
    for (std::size_t w = 0; w < t.grid->size(); ++w) {
        for (std::size_t i = 0; i < t.terms.size(); ++i) coeffs[i] = t.terms[i].first.values[w];
        slices.push_back(weighted_sum(parts, coeffs));
    }
    return SuperpositionField{t.grid, std::move(slices)};
}

SuperpositionField sample_to_superposition(const SampleOperator& s, const GridFunction& phi,
                                           double consistency_tol, double zero_tol) {
    check_on_grid(phi, s.grid);
    for (std::size_t w = 0; w < phi.size(); ++w)
        if (phi.values[w] < 0.0)
            fail_at(errc::negative_bound, "bound function must be nonnegative", w);

    const std::size_t m = s.samples.size();
    std::vector<ScalarPWL> slices;
    slices.reserve(s.grid->size());
    std::vector<std::pair<double, double>> data(m);
    for (std::size_t w = 0; w < s.grid->size(); ++w) {
        for (std::size_t j = 0; j < m; ++j)
            data[j] = {s.samples[j].first.values[w], s.samples[j].second.values[w]};
        std::stable_sort(data.begin(), data.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });

        // Merge abscissas that coincide (to zero_tol); their ordinates must
        // agree to consistency_tol or the operator is not diagonal at w.
        std::vector<double> xs, ys;
        std::size_t j = 0;
        while (j < m) {
            std::size_t l = j;
            double ymin = data[j].second, ymax = data[j].second;
            double xsum = data[j].first, ysum = data[j].second;
            while (l + 1 < m && data[l + 1].first - data[j].first <= zero_tol) {
                ++l;
                ymin = std::min(ymin, data[l].second);
                ymax = std::max(ymax, data[l].second);
                xsum += data[l].first;
                ysum += data[l].second;
            }
            if (ymax - ymin > consistency_tol)
                fail_at(errc::ill_defined_at_point,
                        "coincident sample values map to different images", w);
            double cnt = static_cast<double>(l - j + 1);
            xs.push_back(xsum / cnt);
            ys.push_back(ysum / cnt);
            j = l + 1;
        }
        slices.push_back(mcshane_envelope(xs, ys, phi.values[w]));
    }
    return SuperpositionField{s.grid, std::move(slices)};
}

}  // namespace llip
