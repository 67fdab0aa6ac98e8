#pragma once

#include <cstdint>
#include <optional>

#include "sdquant/step_quantile.hpp"

namespace sdquant::oracles {

/// Values of a function sampled at k/n for k = 0..n-1. Deliberately dumb
/// carrier for the brute-force references below.
struct GridFunction {
    std::size_t n = 2;
    std::vector<double> values;

    double step() const { return 1.0 / static_cast<double>(n); }
    double abscissa(std::size_t k) const { return static_cast<double>(k) / static_cast<double>(n); }
};

/// 64-bit linear congruential generator,
/// state <- state * 6364136223846793005 + 1442695040888963407,
/// doubles taken from the top 53 bits. Fixed here so oracle runs are
/// reproducible across platforms and languages.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    /// Uniform draw in [0,1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform draw in {0, ..., n-1}.
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

private:
    std::uint64_t state_;
};

/// Random step quantile with at most max_segments segments and values in
/// [0, max_value]; breakpoints are kept at least min_gap apart.
StepQuantile random_step_quantile(Lcg& rng, std::size_t max_segments, double max_value,
                                  double min_gap = 1e-2);

/// Direct evaluation of the defining maximum
///   phi(t) = max_{s<=t} (I2(s) + I1(t) - I1(s)),
/// where I1, I2 are the integrals of q1, q2. For each grid point the
/// maximum runs over all grid points and input breakpoints up to t, which
/// makes it exact there (the inner objective is piecewise linear in s
/// with knots only at input breakpoints).
GridFunction brute_envelope(const StepQuantile& q1, const StepQuantile& q2, std::size_t n);

/// Explicit Euler with projection for the complementarity ODE:
///   phi_k = max(phi_{k-1} + q1(t_{k-1}) dt, I2(t_k)),  phi_0 = 0.
/// First-order accurate; independent cross-check only.
GridFunction euler_envelope(const StepQuantile& q1, const StepQuantile& q2, std::size_t n);

/// Random feasible element of the constraint set for (q1, q2): draws a
/// seeded step function S and returns the minimal solution of the
/// perturbed problem (max(S, q1), q2), which dominates q1 first order and
/// q2 second order by construction.
StepQuantile feasible_sample(const StepQuantile& q1, const StepQuantile& q2, std::uint64_t seed);

/// Closed-form minimal quantile when q1 - q2 changes sign at most once on
/// the merged grid; empty when the pair is not single-crossing.
/// Crossing from above: q1 up to the first point where its integral falls
/// below q2's, then q2. Crossing from below: the pointwise maximum.
std::optional<StepQuantile> single_crossing_solution(const StepQuantile& q1,
                                                     const StepQuantile& q2);

} // namespace sdquant::oracles
