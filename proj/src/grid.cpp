#include "llip/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <limits>

namespace llip {

const char* to_string(Metric m) {
    return m == Metric::euclidean ? "euclidean" : "chebyshev";
}

Metric metric_from_string(const std::string& s) {
    if (s == "euclidean") return Metric::euclidean;
    if (s == "chebyshev") return Metric::chebyshev;
    fail(errc::bad_input, "unknown metric '" + s + "'");
}

namespace {

double point_distance(const std::vector<double>& a, const std::vector<double>& b, Metric m) {
    if (m == Metric::chebyshev) {
        double d = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
        return d;
    }
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        double dk = a[k] - b[k];
        s += dk * dk;
    }
    return std::sqrt(s);
}

// FNV-1a over the raw double bits; stable across runs, used only as an
// identity tag for compatibility checks.
std::string content_hash(const std::vector<std::vector<double>>& pts, Metric m) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const void* data, std::size_t n) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= p[i];
            h *= 1099511628211ull;
        }
    };
    std::uint64_t dim = pts.front().size();
    mix(&dim, sizeof dim);
    int tag = static_cast<int>(m);
    mix(&tag, sizeof tag);
    for (const auto& p : pts)
        for (double x : p) {
            std::uint64_t bits;
            std::memcpy(&bits, &x, sizeof bits);
            mix(&bits, sizeof bits);
        }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace

CompactGrid::CompactGrid(std::vector<std::vector<double>> points, Metric metric)
    : points_(std::move(points)), metric_(metric) {
    if (points_.size() < 2) fail(errc::bad_input, "grid needs at least 2 points");
    const std::size_t d = points_.front().size();
    if (d == 0) fail(errc::bad_input, "grid points must have dimension >= 1");
    for (const auto& p : points_) {
        if (p.size() != d) fail(errc::bad_input, "inconsistent point dimensions");
        for (double x : p)
            if (!std::isfinite(x)) fail(errc::non_finite_value, "non-finite grid coordinate");
    }
    std::vector<double> nn(points_.size(), std::numeric_limits<double>::infinity());
    double min_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j) {
            double dij = point_distance(points_[i], points_[j], metric_);
            min_d = std::min(min_d, dij);
            nn[i] = std::min(nn[i], dij);
            nn[j] = std::min(nn[j], dij);
        }
    if (min_d < 1e-12) fail(errc::bad_input, "grid points closer than 1e-12");
    min_spacing_ = min_d;
    std::sort(nn.begin(), nn.end());
    median_spacing_ = nn[nn.size() / 2];
    id_ = content_hash(points_, metric_);
}

double CompactGrid::distance(std::size_t i, std::size_t j) const {
    return point_distance(points_[i], points_[j], metric_);
}

GridPtr make_interval_grid(double a, double b, std::size_t n) {
    if (!(a < b)) fail(errc::invalid_range, "interval grid needs a < b");
    if (n < 2) fail(errc::invalid_range, "interval grid needs n >= 2");
    std::vector<std::vector<double>> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        pts.push_back({a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1)});
    return std::make_shared<CompactGrid>(std::move(pts), Metric::euclidean);
}

GridPtr make_grid(std::vector<std::vector<double>> points, Metric metric) {
    return std::make_shared<CompactGrid>(std::move(points), metric);
}

GridFunction tabulate(const GridPtr& grid,
                      const std::function<double(const std::vector<double>&)>& rule) {
    GridFunction f{grid, {}};
    f.values.reserve(grid->size());
    for (std::size_t i = 0; i < grid->size(); ++i) {
        double v = rule(grid->point(i));
        if (!std::isfinite(v)) fail_at(errc::non_finite_value, "rule yielded non-finite value", i);
        f.values.push_back(v);
    }
    return f;
}

GridFunction tabulate1(const GridPtr& grid, const std::function<double(double)>& rule) {
    return tabulate(grid, [&rule](const std::vector<double>& p) { return rule(p[0]); });
}

GridFunction constant_function(const GridPtr& grid, double c) {
    if (!std::isfinite(c)) fail(errc::non_finite_value, "non-finite constant");
    return GridFunction{grid, std::vector<double>(grid->size(), c)};
}

double sup_norm(const GridFunction& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

void check_same_grid(const GridFunction& a, const GridFunction& b) {
    if (!a.grid || !b.grid || a.grid->id() != b.grid->id())
        fail(errc::grid_mismatch, "functions live on different grids");
}

void check_on_grid(const GridFunction& f, const GridPtr& grid) {
    if (!f.grid || !grid || f.grid->id() != grid->id())
        fail(errc::grid_mismatch, "function is not on the expected grid");
    if (f.values.size() != grid->size())
        fail(errc::bad_input, "function length does not match grid size");
}

ContinuityReport continuity_report(const GridFunction& f, double adjacency_radius,
                                   double threshold, double threshold_factor) {
    const CompactGrid& g = *f.grid;
    if (f.values.size() != g.size())
        fail(errc::bad_input, "function length does not match grid size");
    ContinuityReport rep;
    rep.adjacency_radius = adjacency_radius;

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<double> quotients;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            double d = g.distance(i, j);
            if (d <= adjacency_radius) {
                pairs.emplace_back(i, j);
                quotients.push_back(std::abs(f.values[i] - f.values[j]) / d);
            }
        }
    if (pairs.empty()) fail(errc::empty_adjacency, "no point pair within adjacency radius");

    // Deterministic argmax: lowest-index pair wins ties (strict > scan).
    std::size_t worst = 0;
    for (std::size_t k = 1; k < quotients.size(); ++k)
        if (quotients[k] > quotients[worst]) worst = k;
    rep.modulus = quotients[worst];
    rep.worst_pair = pairs[worst];

    if (threshold < 0.0) {
        std::vector<double> sorted = quotients;
        std::sort(sorted.begin(), sorted.end());
        threshold = threshold_factor * sorted[sorted.size() / 2];
    }
    rep.threshold = threshold;
    for (std::size_t k = 0; k < quotients.size(); ++k)
        if (quotients[k] > threshold) rep.flagged_pairs.push_back(pairs[k]);
    rep.is_flagged_discontinuous = rep.modulus > threshold;
    return rep;
}

const char* to_string(errc c) {
    switch (c) {
        case errc::invalid_range: return "invalid-range";
        case errc::non_finite_value: return "non-finite-value";
        case errc::empty_adjacency: return "empty-adjacency";
        case errc::grid_mismatch: return "grid-mismatch";
        case errc::not_in_domain: return "not-in-domain";
        case errc::invalid_k: return "invalid-k";
        case errc::negative_bound: return "negative-bound";
        case errc::ill_defined_at_point: return "ill-defined-at-point";
        case errc::insufficient_samples: return "insufficient-samples";
        case errc::negative_l: return "negative-L";
        case errc::degenerate_probe: return "degenerate-probe";
        case errc::breakpoint_overflow: return "breakpoint-overflow";
        case errc::bad_input: return "bad-input";
    }
    return "unknown";
}

}  // namespace llip
