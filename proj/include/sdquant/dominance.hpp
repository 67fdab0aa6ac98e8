#pragma once

#include <optional>

#include "sdquant/step_quantile.hpp"

namespace sdquant {

/// Outcome of a stochastic dominance check. `margin` is the minimal slack
/// of the defining inequality over the merged grid; the check holds iff
/// margin >= -kTol, and `witness` is the smallest grid point where the
/// inequality fails (present iff the check does not hold).
struct DominanceReport {
    bool holds = true;
    std::optional<double> witness;
    double margin = 0.0;
};

/// First-order stochastic dominance: a(t) >= b(t) for all t in [0,1).
/// Exact for step functions via the merged breakpoint grid.
DominanceReport fsd_check(const StepQuantile& a, const StepQuantile& b);

/// Second-order stochastic dominance: integrals of a dominate integrals
/// of b. The difference of the two integrals is piecewise linear, so the
/// minimum is attained at a merged knot.
DominanceReport ssd_check(const StepQuantile& a, const StepQuantile& b);

} // namespace sdquant
