#pragma once

#include <span>
#include <vector>

#include "sdquant/piecewise_linear.hpp"
#include "sdquant/step_quantile.hpp"

namespace sdquant {

/// Closed interval of probability levels.
struct ProbInterval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Solution of the mixed-dominance envelope problem for a pair of
/// benchmark quantiles (fsd_bound, ssd_bound):
///   envelope  — the minimal convex increasing function with slope at
///               least fsd_bound that stays above integrate(ssd_bound);
///   quantile  — its right derivative, the SSD-minimal feasible quantile;
///   contact   — maximal intervals where envelope meets
///               integrate(ssd_bound) within kTol, i.e. where the
///               integral constraint binds;
///   formula_mismatches — diagnostic only: grid points where the
///               case-split formula (fsd_bound off contact, pointwise max
///               on contact) disagrees with the extracted slope. Empty in
///               exact arithmetic; a nonempty list flags a
///               tolerance-sensitive contact classification, not an
///               error.
struct EnvelopeSolution {
    PiecewiseLinearFn envelope;
    StepQuantile quantile;
    std::vector<ProbInterval> contact;
    std::vector<double> formula_mismatches;
};

/// Running maximum M(t) = max_{s<=t} f(s), computed in one sweep with an
/// exact crossing knot inserted wherever a segment rises through the
/// maximum reached so far. M is increasing, M >= f, M(0) = f(0), and M is
/// flat wherever M > f (the reflection/complementarity property).
PiecewiseLinearFn running_max(const PiecewiseLinearFn& f);

/// Upper envelope max(a, b) with exact intersection knots inserted.
/// Preserves convexity when both inputs are convex.
PiecewiseLinearFn upper_envelope(const PiecewiseLinearFn& a, const PiecewiseLinearFn& b);

/// Computes the SSD-minimal quantile subject to first-order dominance
/// over fsd_bound and second-order dominance over ssd_bound. Always
/// solvable; postconditions (feasibility, binding complementarity) are
/// verified internally and throw std::logic_error on failure, which
/// indicates a bug rather than bad input.
EnvelopeSolution ssd_minimal(const StepQuantile& fsd_bound, const StepQuantile& ssd_bound);

/// Collapses several first-order constraints into the single equivalent
/// one: the pointwise maximum. Throws on an empty list.
StepQuantile reduce_fsd(std::span<const StepQuantile> constraints);

/// Collapses several second-order constraints into the single equivalent
/// one: the quantile whose integral is the upper envelope of the input
/// integrals. Throws on an empty list.
StepQuantile reduce_ssd(std::span<const StepQuantile> constraints);

} // namespace sdquant
