#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sdquant/common.hpp"

namespace sdquant {

/// A right-continuous, increasing, nonnegative step function on [0,1):
/// the quantile function of a finitely supported distribution.
///
/// Q(t) = values[i] for t in [breakpoints[i], breakpoints[i+1]), with the
/// last segment extending to 1. Construction canonicalizes: adjacent
/// segments whose values agree within kTol are merged, so structural
/// equality is semantic equality.
class StepQuantile {
public:
    /// The zero quantile, {0 on [0,1)}.
    StepQuantile();

    /// Builds from breakpoints t0=0 < t1 < ... < tk < 1 and weakly
    /// increasing nonnegative values. Throws std::invalid_argument if the
    /// invariants fail beyond kTol.
    StepQuantile(std::vector<double> breakpoints, std::vector<double> values);

    static StepQuantile constant(double value);

    /// Empirical upper quantile Q(p) = inf{x : F(x) > p} from samples.
    /// Weights default to uniform; duplicate sample values merge their
    /// weight. Throws on negative samples, nonpositive weights, or a
    /// weight sum off 1 by more than kTol.
    static StepQuantile from_samples(std::span<const double> samples,
                                     std::span<const double> weights = {});

    /// Right-continuous evaluation; t must lie in [0,1).
    double operator()(double t) const;

    const std::vector<double>& breakpoints() const { return breaks_; }
    const std::vector<double>& values() const { return values_; }
    std::size_t segment_count() const { return values_.size(); }
    double max_value() const { return values_.back(); }

private:
    std::vector<double> breaks_;
    std::vector<double> values_;
};

/// Pointwise maximum; exact on the union of the input breakpoints.
StepQuantile pointwise_max(const StepQuantile& a, const StepQuantile& b);

/// Canonical-form equality within an absolute tolerance.
bool approx_equal(const StepQuantile& a, const StepQuantile& b, double tol = kTol);

/// Sorted union of the two breakpoint grids (exact dedup).
std::vector<double> merged_breakpoints(const StepQuantile& a, const StepQuantile& b);

} // namespace sdquant
