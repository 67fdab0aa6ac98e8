#include "sdquant/piecewise_linear.hpp"

#include <algorithm>
#include <cmath>

#include "sdquant/step_quantile.hpp"

namespace sdquant {

namespace {

// Drop interior knots that do not change the slope by more than kTol.
// The anchor advances only on a kept knot, so exactly collinear runs
// collapse without drift.
void canonicalize(std::vector<double>& xs, std::vector<double>& ys) {
    if (xs.size() < 3) return;
    std::vector<double> ox{xs[0]}, oy{ys[0]};
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
        const double left = (ys[i] - oy.back()) / (xs[i] - ox.back());
        const double right = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
        if (std::abs(right - left) <= kTol) continue;
        ox.push_back(xs[i]);
        oy.push_back(ys[i]);
    }
    ox.push_back(xs.back());
    oy.push_back(ys.back());
    xs = std::move(ox);
    ys = std::move(oy);
}

} // namespace

PiecewiseLinearFn::PiecewiseLinearFn() : xs_{0.0, 1.0}, ys_{0.0, 0.0} {}

PiecewiseLinearFn::PiecewiseLinearFn(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    detail::require(xs_.size() >= 2 && xs_.size() == ys_.size(),
                    "PiecewiseLinearFn: need at least two knots and equal lengths");
    detail::require(xs_.front() == 0.0 && xs_.back() == 1.0,
                    "PiecewiseLinearFn: knots must span exactly [0,1]");
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        detail::require(std::isfinite(xs_[i]) && std::isfinite(ys_[i]),
                        "PiecewiseLinearFn: entries must be finite");
        if (i > 0)
            detail::require(xs_[i] > xs_[i - 1],
                            "PiecewiseLinearFn: knot abscissae must be strictly increasing");
    }
    canonicalize(xs_, ys_);
}

double PiecewiseLinearFn::operator()(double x) const {
    if (!(x >= 0.0) || x > 1.0)
        throw std::domain_error("PiecewiseLinearFn: evaluation point must lie in [0,1]");
    if (x == xs_.back()) return ys_.back();
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
    return ys_[i] + (x - xs_[i]) * (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
}

double PiecewiseLinearFn::slope(std::size_t i) const {
    return (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
}

std::vector<double> merged_knots(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> grid;
    grid.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(grid));
    std::vector<double> out{grid.front()};
    for (double x : grid)
        if (x - out.back() > kTol) out.push_back(x);
    // Keep the right endpoint exact even if a near-duplicate preceded it.
    if (out.back() != 1.0) {
        if (1.0 - out.back() <= kTol) out.back() = 1.0;
        else out.push_back(1.0);
    }
    return out;
}

namespace {

template <typename Op>
PiecewiseLinearFn combine(const PiecewiseLinearFn& a, const PiecewiseLinearFn& b, Op op) {
    std::vector<double> xs = merged_knots(a.xs(), b.xs());
    std::vector<double> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = op(a(xs[i]), b(xs[i]));
    return PiecewiseLinearFn(std::move(xs), std::move(ys));
}

} // namespace

PiecewiseLinearFn operator+(const PiecewiseLinearFn& a, const PiecewiseLinearFn& b) {
    return combine(a, b, [](double x, double y) { return x + y; });
}

PiecewiseLinearFn operator-(const PiecewiseLinearFn& a, const PiecewiseLinearFn& b) {
    return combine(a, b, [](double x, double y) { return x - y; });
}

PiecewiseLinearFn integrate(const StepQuantile& q) {
    const auto& breaks = q.breakpoints();
    const auto& values = q.values();
    std::vector<double> xs(breaks.begin(), breaks.end());
    xs.push_back(1.0);
    std::vector<double> ys(xs.size());
    ys[0] = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        ys[i + 1] = ys[i] + values[i] * (xs[i + 1] - xs[i]);
    return PiecewiseLinearFn(std::move(xs), std::move(ys));
}

StepQuantile right_slopes(const PiecewiseLinearFn& p) {
    const auto& xs = p.xs();
    const std::size_t k = xs.size() - 1;
    std::vector<double> slopes(k);
    for (std::size_t i = 0; i < k; ++i) slopes[i] = p.slope(i);

    detail::require(slopes[0] >= -kSlopeTol, "right_slopes: function is decreasing");
    slopes[0] = std::max(slopes[0], 0.0);
    for (std::size_t i = 1; i < k; ++i) {
        detail::require(slopes[i] >= slopes[i - 1] - kSlopeTol, "right_slopes: function is not convex");
        slopes[i] = std::max(slopes[i], slopes[i - 1]);
    }
    return StepQuantile(std::vector<double>(xs.begin(), xs.end() - 1), std::move(slopes));
}

bool approx_equal(const PiecewiseLinearFn& a, const PiecewiseLinearFn& b, double tol) {
    if (a.knot_count() != b.knot_count()) return false;
    for (std::size_t i = 0; i < a.knot_count(); ++i) {
        if (std::abs(a.xs()[i] - b.xs()[i]) > tol) return false;
        if (std::abs(a.ys()[i] - b.ys()[i]) > tol) return false;
    }
    return true;
}

} // namespace sdquant
