#include "sdquant/dominance.hpp"

#include <algorithm>

#include "sdquant/piecewise_linear.hpp"

namespace sdquant {

namespace {

DominanceReport scan(const std::vector<double>& grid, auto&& slack_at) {
    DominanceReport report;
    report.margin = 0.0;
    bool first = true;
    for (double t : grid) {
        const double s = slack_at(t);
        if (first || s < report.margin) report.margin = s;
        first = false;
        if (s < -kTol && !report.witness) report.witness = t;
    }
    report.holds = !report.witness.has_value();
    return report;
}

} // namespace

DominanceReport fsd_check(const StepQuantile& a, const StepQuantile& b) {
    return scan(merged_breakpoints(a, b), [&](double t) { return a(t) - b(t); });
}

DominanceReport ssd_check(const StepQuantile& a, const StepQuantile& b) {
    const PiecewiseLinearFn ia = integrate(a);
    const PiecewiseLinearFn ib = integrate(b);
    std::vector<double> grid;
    std::merge(ia.xs().begin(), ia.xs().end(), ib.xs().begin(), ib.xs().end(),
               std::back_inserter(grid));
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return scan(grid, [&](double t) { return ia(t) - ib(t); });
}

} // namespace sdquant
