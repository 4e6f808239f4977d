#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "llip/error.hpp"

namespace llip {

enum class Metric { euclidean, chebyshev };

const char* to_string(Metric m);
Metric metric_from_string(const std::string& s);

/// Finite sample of a compact metric space K: an ordered list of points in
/// R^d together with a metric. Immutable after construction and identified
/// by a content hash so cross-grid operations can fail fast.
class CompactGrid {
public:
    CompactGrid(std::vector<std::vector<double>> points, Metric metric);

    std::size_t size() const { return points_.size(); }
    std::size_t dim() const { return points_.front().size(); }
    const std::vector<double>& point(std::size_t i) const { return points_[i]; }
    const std::vector<std::vector<double>>& points() const { return points_; }
    Metric metric() const { return metric_; }
    const std::string& id() const { return id_; }

    double distance(std::size_t i, std::size_t j) const;

    /// Smallest pairwise distance.
    double min_spacing() const { return min_spacing_; }
    /// Median over points of the nearest-neighbour distance.
    double median_spacing() const { return median_spacing_; }

private:
    std::vector<std::vector<double>> points_;
    Metric metric_;
    std::string id_;
    double min_spacing_;
    double median_spacing_;
};

using GridPtr = std::shared_ptr<const CompactGrid>;

/// n equally spaced points on [a,b] with the euclidean metric.
GridPtr make_interval_grid(double a, double b, std::size_t n);

GridPtr make_grid(std::vector<std::vector<double>> points, Metric metric);

/// One real value per grid point; the discrete stand-in for an element of
/// C(K) or B(K).
struct GridFunction {
    GridPtr grid;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
};

GridFunction tabulate(const GridPtr& grid,
                      const std::function<double(const std::vector<double>&)>& rule);

/// Convenience for 1-d grids: the rule sees the first coordinate only.
GridFunction tabulate1(const GridPtr& grid, const std::function<double(double)>& rule);

GridFunction constant_function(const GridPtr& grid, double c);

double sup_norm(const GridFunction& f);

void check_same_grid(const GridFunction& a, const GridFunction& b);
void check_on_grid(const GridFunction& f, const GridPtr& grid);

struct ContinuityReport {
    double modulus = 0.0;
    double adjacency_radius = 0.0;
    double threshold = 0.0;
    bool is_flagged_discontinuous = false;
    std::pair<std::size_t, std::size_t> worst_pair{0, 0};
    /// All adjacent pairs whose difference quotient exceeds the threshold.
    std::vector<std::pair<std::size_t, std::size_t>> flagged_pairs;
};

/// Discrete continuity proxy: the largest |f(i)-f(j)|/d(i,j) over pairs
/// within adjacency_radius. A negative threshold selects the default of
/// threshold_factor times the median quotient; jump discontinuities have a
/// quotient diverging like 1/spacing and separate sharply from that.
ContinuityReport continuity_report(const GridFunction& f, double adjacency_radius,
                                   double threshold = -1.0, double threshold_factor = 50.0);

}  // namespace llip
