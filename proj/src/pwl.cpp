#include "llip/pwl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace llip {

namespace {

// Breakpoints closer than this are considered one point when merging
// candidate sets.
constexpr double kMergeTol = 1e-12;

void sort_merge(std::vector<double>& xs) {
    std::sort(xs.begin(), xs.end());
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs)
        if (out.empty() || x - out.back() > kMergeTol) out.push_back(x);
    xs = std::move(out);
}

}  // namespace

ScalarPWL::ScalarPWL(std::vector<double> breakpoints, std::vector<double> values,
                     double left_slope, double right_slope)
    : bp_(std::move(breakpoints)), val_(std::move(values)), left_(left_slope),
      right_(right_slope) {
    if (bp_.empty() || bp_.size() != val_.size())
        fail(errc::bad_input, "PWL needs matching, non-empty breakpoint/value lists");
    for (std::size_t i = 0; i + 1 < bp_.size(); ++i)
        if (!(bp_[i] < bp_[i + 1]))
            fail(errc::bad_input, "PWL breakpoints must be strictly increasing");
    for (double b : bp_)
        if (!std::isfinite(b)) fail(errc::non_finite_value, "non-finite PWL breakpoint");
    for (double v : val_)
        if (!std::isfinite(v)) fail(errc::non_finite_value, "non-finite PWL value");
    if (!std::isfinite(left_) || !std::isfinite(right_))
        fail(errc::non_finite_value, "non-finite PWL slope");
}

ScalarPWL ScalarPWL::constant(double c) { return ScalarPWL({0.0}, {c}, 0.0, 0.0); }

ScalarPWL ScalarPWL::identity() { return ScalarPWL({0.0}, {0.0}, 1.0, 1.0); }

double ScalarPWL::operator()(double r) const {
    if (r <= bp_.front()) return val_.front() + left_ * (r - bp_.front());
    if (r >= bp_.back()) return val_.back() + right_ * (r - bp_.back());
    auto it = std::upper_bound(bp_.begin(), bp_.end(), r);
    std::size_t i = static_cast<std::size_t>(it - bp_.begin()) - 1;
    if (r == bp_[i]) return val_[i];
    return val_[i] + segment_slope(i) * (r - bp_[i]);
}

double ScalarPWL::segment_slope(std::size_t i) const {
    return (val_[i + 1] - val_[i]) / (bp_[i + 1] - bp_[i]);
}

double ScalarPWL::lip_constant() const {
    double m = std::max(std::abs(left_), std::abs(right_));
    for (std::size_t i = 0; i + 1 < bp_.size(); ++i)
        m = std::max(m, std::abs(segment_slope(i)));
    return m;
}

double ScalarPWL::slope_below(double r) const {
    if (r <= bp_.front()) return left_;
    if (r > bp_.back()) return right_;
    auto it = std::lower_bound(bp_.begin(), bp_.end(), r);  // first >= r
    std::size_t i = static_cast<std::size_t>(it - bp_.begin());
    // r in (bp_[i-1], bp_[i]]
    return segment_slope(i - 1);
}

double ScalarPWL::slope_above(double r) const {
    if (r >= bp_.back()) return right_;
    if (r < bp_.front()) return left_;
    auto it = std::upper_bound(bp_.begin(), bp_.end(), r);  // first > r
    std::size_t i = static_cast<std::size_t>(it - bp_.begin());
    // r in [bp_[i-1], bp_[i])
    return i == 0 ? left_ : segment_slope(i - 1);
}

ScalarPWL ScalarPWL::pruned(double tol) const {
    if (bp_.size() == 1) return *this;
    std::vector<double> nb, nv;
    for (std::size_t i = 0; i < bp_.size(); ++i) {
        double s_in = (i == 0) ? left_ : segment_slope(i - 1);
        double s_out = (i + 1 == bp_.size()) ? right_ : segment_slope(i);
        if (std::abs(s_in - s_out) > tol * std::max(1.0, std::abs(s_in))) {
            nb.push_back(bp_[i]);
            nv.push_back(val_[i]);
        }
    }
    if (nb.empty()) {  // globally linear
        nb.push_back(bp_.front());
        nv.push_back(val_.front());
    }
    return ScalarPWL(std::move(nb), std::move(nv), left_, right_);
}

ScalarPWL weighted_sum(std::span<const ScalarPWL> parts, std::span<const double> coeffs) {
    if (parts.empty() || parts.size() != coeffs.size())
        fail(errc::bad_input, "weighted_sum needs matching, non-empty part/coefficient lists");
    std::vector<double> bp;
    for (const auto& p : parts)
        bp.insert(bp.end(), p.breakpoints().begin(), p.breakpoints().end());
    sort_merge(bp);
    std::vector<double> val(bp.size(), 0.0);
    double ls = 0.0, rs = 0.0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        for (std::size_t i = 0; i < bp.size(); ++i) val[i] += coeffs[k] * parts[k](bp[i]);
        ls += coeffs[k] * parts[k].left_slope();
        rs += coeffs[k] * parts[k].right_slope();
    }
    return ScalarPWL(std::move(bp), std::move(val), ls, rs).pruned();
}

ScalarPWL mcshane_envelope(std::span<const double> xs, std::span<const double> ys, double L) {
    if (xs.empty() || xs.size() != ys.size())
        fail(errc::bad_input, "mcshane_envelope needs matching, non-empty data");
    if (L < 0.0) fail(errc::negative_bound, "negative Lipschitz constant");
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        if (!(xs[i] < xs[i + 1]))
            fail(errc::bad_input, "mcshane_envelope abscissas must be strictly increasing");

    if (L == 0.0) {
        double m = ys[0];
        for (double y : ys) m = std::max(m, y);
        return ScalarPWL::constant(m);
    }

    std::vector<double> cand(xs.begin(), xs.end());
    // Kinks can also occur where the downward ray of tent j meets the upward
    // ray of tent l.
    for (std::size_t j = 0; j < xs.size(); ++j)
        for (std::size_t l = j + 1; l < xs.size(); ++l) {
            double r = 0.5 * ((ys[j] - ys[l]) / L + xs[j] + xs[l]);
            if (r > xs[j] && r < xs[l]) cand.push_back(r);
        }
    sort_merge(cand);

    std::vector<double> val(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) {
        double m = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < xs.size(); ++j)
            m = std::max(m, ys[j] - L * std::abs(xs[j] - cand[i]));
        val[i] = m;
    }
    return ScalarPWL(std::move(cand), std::move(val), L, -L).pruned();
}

double composed_lip_constant(const ScalarPWL& outer, const ScalarPWL& inner) {
    const double inf = std::numeric_limits<double>::infinity();
    struct Piece {
        double slope, lo, hi;
    };
    std::vector<Piece> op;
    const auto& ob = outer.breakpoints();
    op.push_back({outer.left_slope(), -inf, ob.front()});
    for (std::size_t i = 0; i + 1 < ob.size(); ++i)
        op.push_back({outer.segment_slope(i), ob[i], ob[i + 1]});
    op.push_back({outer.right_slope(), ob.back(), inf});

    const auto& iv = inner.values();
    auto image = [](double slope, double v, bool leftward) -> Piece {
        const double inf2 = std::numeric_limits<double>::infinity();
        bool down = leftward ? slope > 0.0 : slope < 0.0;
        return down ? Piece{slope, -inf2, v} : Piece{slope, v, inf2};
    };
    std::vector<Piece> ip;
    if (inner.left_slope() != 0.0)
        ip.push_back(image(inner.left_slope(), iv.front(), true));
    for (std::size_t i = 0; i + 1 < iv.size(); ++i)
        ip.push_back({inner.segment_slope(i), std::min(iv[i], iv[i + 1]),
                      std::max(iv[i], iv[i + 1])});
    if (inner.right_slope() != 0.0)
        ip.push_back(image(inner.right_slope(), iv.back(), false));

    double m = 0.0;
    for (const Piece& a : ip)
        for (const Piece& b : op)
            if (a.lo <= b.hi && b.lo <= a.hi) m = std::max(m, std::abs(a.slope * b.slope));
    return m;
}

ScalarPWL compose(const ScalarPWL& outer, const ScalarPWL& inner,
                  std::size_t max_breakpoints) {
    std::vector<double> cand(inner.breakpoints().begin(), inner.breakpoints().end());
    const auto& ib = inner.breakpoints();
    const auto& iv = inner.values();
    const std::size_t n = ib.size();

    auto add_preimages = [&](double slope, double x_ref, double v_ref, double lo, double hi) {
        if (slope == 0.0) return;
        for (double beta : outer.breakpoints()) {
            double r = x_ref + (beta - v_ref) / slope;
            if (r >= lo && r <= hi && std::isfinite(r)) cand.push_back(r);
        }
    };

    const double inf = std::numeric_limits<double>::infinity();
    add_preimages(inner.left_slope(), ib.front(), iv.front(), -inf, ib.front());
    for (std::size_t i = 0; i + 1 < n; ++i)
        add_preimages(inner.segment_slope(i), ib[i], iv[i], ib[i], ib[i + 1]);
    add_preimages(inner.right_slope(), ib.back(), iv.back(), ib.back(), inf);
    sort_merge(cand);
    if (cand.size() > max_breakpoints)
        fail(errc::breakpoint_overflow, "composed slice exceeds breakpoint cap");

    std::vector<double> val(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) val[i] = outer(inner(cand[i]));

    // Outside the candidate span, inner is linear and its image avoids all
    // outer breakpoints, so the composition is linear; a unit chord strictly
    // outside the span recovers the ray slope. (Classifying the outer piece
    // by inner(cand.front()) instead is wrong: a ray preimage maps onto an
    // outer breakpoint up to rounding, and the rounding can pick the wrong
    // side.)
    double ls = val.front() - outer(inner(cand.front() - 1.0));
    double rs = outer(inner(cand.back() + 1.0)) - val.back();
    return ScalarPWL(std::move(cand), std::move(val), ls, rs).pruned();
}

}  // namespace llip
