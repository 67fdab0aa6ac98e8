#include "sdquant/step_quantile.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sdquant {

namespace {

// Canonicalize in place: clamp tolerance-level dips, merge equal-value
// neighbours. Assumes sizes match and basic grid invariants hold.
void canonicalize(std::vector<double>& breaks, std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0.0) values[i] = 0.0;
        if (i > 0 && values[i] < values[i - 1]) values[i] = values[i - 1];
    }
    std::size_t out = 1;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] - values[out - 1] <= kTol) continue;
        breaks[out] = breaks[i];
        values[out] = values[i];
        ++out;
    }
    breaks.resize(out);
    values.resize(out);
}

} // namespace

StepQuantile::StepQuantile() : breaks_{0.0}, values_{0.0} {}

StepQuantile::StepQuantile(std::vector<double> breakpoints, std::vector<double> values)
    : breaks_(std::move(breakpoints)), values_(std::move(values)) {
    detail::require(!breaks_.empty() && breaks_.size() == values_.size(),
                    "StepQuantile: breakpoints and values must be nonempty and of equal length");
    detail::require(breaks_.front() == 0.0, "StepQuantile: first breakpoint must be 0");
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
        detail::require(std::isfinite(breaks_[i]) && std::isfinite(values_[i]),
                        "StepQuantile: entries must be finite");
        detail::require(breaks_[i] < 1.0, "StepQuantile: breakpoints must be < 1");
        if (i > 0)
            detail::require(breaks_[i] > breaks_[i - 1],
                            "StepQuantile: breakpoints must be strictly increasing");
        detail::require(values_[i] >= -kTol, "StepQuantile: values must be nonnegative");
        if (i > 0)
            detail::require(values_[i] >= values_[i - 1] - kTol,
                            "StepQuantile: values must be weakly increasing");
    }
    canonicalize(breaks_, values_);
}

StepQuantile StepQuantile::constant(double value) {
    return StepQuantile({0.0}, {value});
}

StepQuantile StepQuantile::from_samples(std::span<const double> samples,
                                        std::span<const double> weights) {
    detail::require(!samples.empty(), "from_samples: empty sample set");
    const std::size_t n = samples.size();
    for (double v : samples)
        detail::require(std::isfinite(v) && v >= 0.0, "from_samples: negative sample");

    std::vector<double> w;
    if (weights.empty()) {
        w.assign(n, 1.0 / static_cast<double>(n));
    } else {
        detail::require(weights.size() == n, "from_samples: weight count mismatch");
        w.assign(weights.begin(), weights.end());
        for (double x : w)
            detail::require(std::isfinite(x) && x > 0.0, "from_samples: nonpositive weight");
        double sum = std::accumulate(w.begin(), w.end(), 0.0);
        detail::require(std::abs(sum - 1.0) <= kTol, "from_samples: weights must sum to 1");
    }
    const double total = std::accumulate(w.begin(), w.end(), 0.0);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return samples[a] < samples[b]; });

    // Walk samples in ascending order; a breakpoint opens where the value
    // changes, at the cumulative probability reached so far.
    std::vector<double> breaks{0.0};
    std::vector<double> values{samples[order[0]]};
    double running = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double v = samples[order[j]];
        if (v != values.back()) {
            const double c = running / total;
            if (c >= 1.0) break; // remaining mass below float resolution
            if (c > breaks.back()) {
                breaks.push_back(c);
                values.push_back(v);
            } else {
                values.back() = v; // previous segment had zero width
            }
        }
        running += w[order[j]];
    }
    return StepQuantile(std::move(breaks), std::move(values));
}

double StepQuantile::operator()(double t) const {
    if (!(t >= 0.0) || t >= 1.0)
        throw std::domain_error("StepQuantile: evaluation point must lie in [0,1)");
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    return values_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
}

std::vector<double> merged_breakpoints(const StepQuantile& a, const StepQuantile& b) {
    std::vector<double> grid;
    grid.reserve(a.breakpoints().size() + b.breakpoints().size());
    std::merge(a.breakpoints().begin(), a.breakpoints().end(),
               b.breakpoints().begin(), b.breakpoints().end(), std::back_inserter(grid));
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

StepQuantile pointwise_max(const StepQuantile& a, const StepQuantile& b) {
    std::vector<double> grid = merged_breakpoints(a, b);
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        values[i] = std::max(a(grid[i]), b(grid[i]));
    return StepQuantile(std::move(grid), std::move(values));
}

bool approx_equal(const StepQuantile& a, const StepQuantile& b, double tol) {
    if (a.segment_count() != b.segment_count()) return false;
    for (std::size_t i = 0; i < a.segment_count(); ++i) {
        if (std::abs(a.breakpoints()[i] - b.breakpoints()[i]) > tol) return false;
        if (std::abs(a.values()[i] - b.values()[i]) > tol) return false;
    }
    return true;
}

} // namespace sdquant
