#include "sdquant/envelope.hpp"

#include <algorithm>
#include <cmath>

#include "sdquant/dominance.hpp"

namespace sdquant {

PiecewiseLinearFn running_max(const PiecewiseLinearFn& f) {
    const auto& xs = f.xs();
    const auto& ys = f.ys();
    std::vector<double> ox{xs[0]}, oy{ys[0]};
    double peak = ys[0];
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double x0 = xs[i], x1 = xs[i + 1];
        const double y0 = ys[i], y1 = ys[i + 1];
        if (y1 <= peak) {
            // Segment stays at or below the maximum so far (y0 <= peak
            // already holds): flat piece.
            ox.push_back(x1);
            oy.push_back(peak);
        } else {
            if (y0 < peak) {
                // Rising segment crosses the old maximum strictly inside.
                const double xc = x0 + (peak - y0) * (x1 - x0) / (y1 - y0);
                if (xc - x0 > kKnotSnap && x1 - xc > kKnotSnap) {
                    ox.push_back(xc);
                    oy.push_back(peak);
                }
            }
            ox.push_back(x1);
            oy.push_back(y1);
            peak = y1;
        }
    }
    return PiecewiseLinearFn(std::move(ox), std::move(oy));
}

PiecewiseLinearFn upper_envelope(const PiecewiseLinearFn& a, const PiecewiseLinearFn& b) {
    const std::vector<double> grid = merged_knots(a.xs(), b.xs());
    std::vector<double> ox, oy;
    ox.reserve(grid.size() + 4);
    oy.reserve(grid.size() + 4);
    double da = a(grid[0]) - b(grid[0]);
    ox.push_back(grid[0]);
    oy.push_back(std::max(a(grid[0]), b(grid[0])));
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double x1 = grid[i + 1];
        const double db = a(x1) - b(x1);
        if ((da > 0.0 && db < 0.0) || (da < 0.0 && db > 0.0)) {
            const double xc = grid[i] + da * (x1 - grid[i]) / (da - db);
            if (xc - grid[i] > kKnotSnap && x1 - xc > kKnotSnap) {
                ox.push_back(xc);
                oy.push_back(std::max(a(xc), b(xc)));
            }
        }
        ox.push_back(x1);
        oy.push_back(std::max(a(x1), b(x1)));
        da = db;
    }
    return PiecewiseLinearFn(std::move(ox), std::move(oy));
}

namespace {

// Maximal runs of adjacent grid points where gap(t) <= kTol. The gap is
// linear between grid points, so two adjacent contact points imply
// contact on the whole segment between them.
std::vector<ProbInterval> contact_intervals(const std::vector<double>& grid,
                                            const std::vector<double>& gap) {
    std::vector<ProbInterval> out;
    std::size_t i = 0;
    while (i < grid.size()) {
        if (gap[i] > kTol) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < grid.size() && gap[j + 1] <= kTol) ++j;
        out.push_back({grid[i], grid[j]});
        i = j + 1;
    }
    return out;
}

std::vector<double> sorted_union(std::vector<double> a, const std::vector<double>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

} // namespace

EnvelopeSolution ssd_minimal(const StepQuantile& fsd_bound, const StepQuantile& ssd_bound) {
    const PiecewiseLinearFn lower = integrate(fsd_bound);
    const PiecewiseLinearFn target = integrate(ssd_bound);

    // Sweep the slack target - lower over the union of both breakpoint
    // grids, running-max style. On segments where the slack sits below its
    // peak the envelope grows at the first-order bound's rate; where the
    // slack is at its peak and rising the envelope follows the integral
    // target. Taking slopes straight from the inputs keeps every slope an
    // exact input value, so feasibility is exact rather than a rounding
    // casualty.
    std::vector<double> grid = sorted_union(lower.xs(), target.xs());
    std::vector<double> gvals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) gvals[i] = target(grid[i]) - lower(grid[i]);

    std::vector<double> breaks, values;
    breaks.reserve(grid.size() + 4);
    values.reserve(grid.size() + 4);
    double peak = gvals[0];
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double a = grid[i], b = grid[i + 1];
        const double ga = gvals[i], gb = gvals[i + 1];
        peak = std::max(peak, ga);
        if (gb <= peak) { // below the peak throughout: first-order rate
            breaks.push_back(a);
            values.push_back(fsd_bound(a));
        } else if (ga >= peak) { // at the peak and rising: follow the target
            breaks.push_back(a);
            values.push_back(ssd_bound(a));
        } else { // rises through the peak inside the segment
            const double xc = a + (peak - ga) * (b - a) / (gb - ga);
            if (xc - a <= kKnotSnap) {
                breaks.push_back(a);
                values.push_back(ssd_bound(a));
            } else if (b - xc <= kKnotSnap) {
                breaks.push_back(a);
                values.push_back(fsd_bound(a));
            } else {
                breaks.push_back(a);
                values.push_back(fsd_bound(a));
                breaks.push_back(xc);
                values.push_back(ssd_bound(a));
            }
        }
    }

    EnvelopeSolution sol;
    sol.quantile = StepQuantile(std::move(breaks), std::move(values));
    sol.envelope = integrate(sol.quantile);

    // Contact set and postconditions on the union of all relevant grids.
    std::vector<double> check = sorted_union(grid, sol.envelope.xs());
    check = sorted_union(std::move(check), sol.quantile.breakpoints());
    std::vector<double> gap(check.size());
    for (std::size_t i = 0; i < check.size(); ++i) gap[i] = sol.envelope(check[i]) - target(check[i]);
    sol.contact = contact_intervals(check, gap);

    for (std::size_t i = 0; i < check.size(); ++i) {
        const double t = check[i];
        if (t >= 1.0) continue;
        const double q = sol.quantile(t);
        const double slack_fsd = q - fsd_bound(t);
        detail::ensure(slack_fsd >= -kTol, "solution drops below the first-order bound");
        detail::ensure(gap[i] >= -kTol, "solution integral drops below the second-order bound");
        // Both constraints cannot be slack at once.
        detail::ensure(std::min(slack_fsd, gap[i]) <= kTol, "neither constraint binds");
        // Case-split form of the solution; disagreements are recorded, not fatal.
        const double expected =
            gap[i] > kTol ? fsd_bound(t) : std::max(fsd_bound(t), ssd_bound(t));
        if (std::abs(q - expected) > kTol) sol.formula_mismatches.push_back(t);
    }

    detail::ensure(fsd_check(sol.quantile, fsd_bound).holds,
                   "solution fails first-order feasibility");
    detail::ensure(ssd_check(sol.quantile, ssd_bound).holds,
                   "solution fails second-order feasibility");
    return sol;
}

StepQuantile reduce_fsd(std::span<const StepQuantile> constraints) {
    detail::require(!constraints.empty(), "reduce_fsd: no constraints given");
    StepQuantile out = constraints[0];
    for (std::size_t i = 1; i < constraints.size(); ++i) out = pointwise_max(out, constraints[i]);
    return out;
}

StepQuantile reduce_ssd(std::span<const StepQuantile> constraints) {
    detail::require(!constraints.empty(), "reduce_ssd: no constraints given");
    PiecewiseLinearFn hull = integrate(constraints[0]);
    for (std::size_t i = 1; i < constraints.size(); ++i)
        hull = upper_envelope(hull, integrate(constraints[i]));
    return right_slopes(hull);
}

} // namespace sdquant
