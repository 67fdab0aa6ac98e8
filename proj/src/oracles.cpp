#include "sdquant/oracles.hpp"

#include <algorithm>
#include <cmath>

#include "sdquant/envelope.hpp"
#include "sdquant/piecewise_linear.hpp"

namespace sdquant::oracles {

StepQuantile random_step_quantile(Lcg& rng, std::size_t max_segments, double max_value,
                                  double min_gap) {
    const std::size_t k = 1 + static_cast<std::size_t>(rng.next_below(max_segments));
    std::vector<double> breaks{0.0};
    for (std::size_t i = 0; i + 1 < k; ++i) breaks.push_back(rng.next_unit());
    std::sort(breaks.begin(), breaks.end());
    std::vector<double> kept{0.0};
    for (double b : breaks)
        if (b - kept.back() >= min_gap && b < 1.0 - min_gap) kept.push_back(b);

    std::vector<double> values(kept.size());
    for (double& v : values) v = rng.next_unit() * max_value;
    std::sort(values.begin(), values.end());
    return StepQuantile(std::move(kept), std::move(values));
}

GridFunction brute_envelope(const StepQuantile& q1, const StepQuantile& q2, std::size_t n) {
    detail::require(n >= 2, "brute_envelope: grid size must be at least 2");
    const PiecewiseLinearFn i1 = integrate(q1);
    const PiecewiseLinearFn i2 = integrate(q2);

    // Candidate s values: every grid point plus every input breakpoint.
    std::vector<double> cand;
    cand.reserve(n + q1.segment_count() + q2.segment_count());
    for (std::size_t k = 0; k < n; ++k)
        cand.push_back(static_cast<double>(k) / static_cast<double>(n));
    cand.insert(cand.end(), q1.breakpoints().begin(), q1.breakpoints().end());
    cand.insert(cand.end(), q2.breakpoints().begin(), q2.breakpoints().end());
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    std::vector<double> objective(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) objective[i] = i2(cand[i]) - i1(cand[i]);

    GridFunction out;
    out.n = n;
    out.values.resize(n);
    std::size_t limit = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(n);
        while (limit + 1 < cand.size() && cand[limit + 1] <= t) ++limit;
        double best = objective[0];
        for (std::size_t i = 1; i <= limit; ++i) best = std::max(best, objective[i]);
        out.values[k] = i1(t) + best;
    }
    return out;
}

GridFunction euler_envelope(const StepQuantile& q1, const StepQuantile& q2, std::size_t n) {
    detail::require(n >= 2, "euler_envelope: grid size must be at least 2");
    const PiecewiseLinearFn i2 = integrate(q2);
    const double dt = 1.0 / static_cast<double>(n);

    GridFunction out;
    out.n = n;
    out.values.resize(n);
    out.values[0] = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        const double prev_t = static_cast<double>(k - 1) / static_cast<double>(n);
        const double t = static_cast<double>(k) / static_cast<double>(n);
        out.values[k] = std::max(out.values[k - 1] + q1(prev_t) * dt, i2(t));
    }
    return out;
}

StepQuantile feasible_sample(const StepQuantile& q1, const StepQuantile& q2, std::uint64_t seed) {
    Lcg rng(seed);
    const double cap = 2.0 * std::max(q1.max_value(), q2.max_value());
    const StepQuantile bump = random_step_quantile(rng, 8, cap);
    return ssd_minimal(pointwise_max(bump, q1), q2).quantile;
}

namespace {

enum class Sign { negative, zero, positive };

Sign sign_of(double x) {
    if (x > kTol) return Sign::positive;
    if (x < -kTol) return Sign::negative;
    return Sign::zero;
}

} // namespace

std::optional<StepQuantile> single_crossing_solution(const StepQuantile& q1,
                                                     const StepQuantile& q2) {
    const std::vector<double> grid = merged_breakpoints(q1, q2);
    bool seen_negative = false, seen_positive = false;
    bool from_above = true, from_below = true;
    for (double t : grid) {
        switch (sign_of(q1(t) - q2(t))) {
            case Sign::positive:
                if (seen_negative) from_above = false;
                seen_positive = true;
                break;
            case Sign::negative:
                if (seen_positive) from_below = false;
                seen_negative = true;
                break;
            case Sign::zero:
                break;
        }
    }
    if (seen_negative && seen_positive && !from_above && !from_below) return std::nullopt;

    if (from_above) {
        // Minimal solution runs along q1 until its integral first falls
        // strictly below q2's, then switches to q2 for good. The switch
        // point is located exactly as the envelope sweep does, so the two
        // routes agree to the last bit on generic inputs.
        const PiecewiseLinearFn lower = integrate(q1);
        const PiecewiseLinearFn target = integrate(q2);
        std::vector<double> xs(lower.xs());
        xs.insert(xs.end(), target.xs().begin(), target.xs().end());
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

        double t_switch = 1.0;
        double peak = 0.0;
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            const double ga = target(xs[i]) - lower(xs[i]);
            const double gb = target(xs[i + 1]) - lower(xs[i + 1]);
            peak = std::max(peak, ga);
            if (gb <= peak) continue;
            if (ga >= peak) {
                t_switch = xs[i];
            } else {
                const double xc = xs[i] + (peak - ga) * (xs[i + 1] - xs[i]) / (gb - ga);
                if (xc - xs[i] <= kKnotSnap) t_switch = xs[i];
                else if (xs[i + 1] - xc <= kKnotSnap) t_switch = xs[i + 1];
                else t_switch = xc;
            }
            break;
        }

        if (t_switch >= 1.0) return q1;
        std::vector<double> breaks, values;
        for (std::size_t i = 0; i < q1.segment_count() && q1.breakpoints()[i] < t_switch; ++i) {
            breaks.push_back(q1.breakpoints()[i]);
            values.push_back(q1.values()[i]);
        }
        if (breaks.empty() || breaks.back() < t_switch) {
            breaks.push_back(t_switch);
            values.push_back(q2(t_switch));
        }
        for (std::size_t i = 0; i < q2.segment_count(); ++i) {
            if (q2.breakpoints()[i] <= t_switch) continue;
            breaks.push_back(q2.breakpoints()[i]);
            values.push_back(q2.values()[i]);
        }
        return StepQuantile(std::move(breaks), std::move(values));
    }
    return pointwise_max(q1, q2);
}

} // namespace sdquant::oracles
