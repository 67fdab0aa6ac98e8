#include "sdquant/market.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sdquant {

Market::Market(std::vector<MarketState> states) : states_(std::move(states)) {
    detail::require(!states_.empty(), "Market: at least one state required");
    double sum = 0.0;
    for (const auto& s : states_) {
        detail::require(std::isfinite(s.p) && s.p > 0.0, "Market: probabilities must be positive");
        detail::require(std::isfinite(s.rho) && s.rho > 0.0,
                        "Market: discount factor values must be positive");
        sum += s.p;
    }
    detail::require(std::abs(sum - 1.0) <= kTol, "Market: probabilities must sum to 1");
}

StepQuantile sdf_quantile(const Market& m) {
    std::vector<double> values(m.size()), weights(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        values[i] = m.states()[i].rho;
        weights[i] = m.states()[i].p;
    }
    return StepQuantile::from_samples(values, weights);
}

double price(const StepQuantile& q, const StepQuantile& q_rho) {
    // Grid where either q(s) or q_rho(1-s) can change value.
    std::vector<double> grid{0.0, 1.0};
    grid.insert(grid.end(), q.breakpoints().begin(), q.breakpoints().end());
    for (double b : q_rho.breakpoints())
        if (b > 0.0) grid.push_back(1.0 - b);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double width = grid[i + 1] - grid[i];
        if (width <= 0.0) continue;
        const double mid = 0.5 * (grid[i] + grid[i + 1]);
        total += q(grid[i]) * q_rho(1.0 - mid) * width;
    }
    return total;
}

std::vector<ProbInterval> comonotone_intervals(const Market& m) {
    std::vector<std::size_t> order(m.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return m.states()[a].rho < m.states()[b].rho;
    });

    // Mirror the cumulative arithmetic of from_samples so the interval
    // endpoints line up exactly with the quantile's breakpoints.
    double total = 0.0;
    for (const auto& s : m.states()) total += s.p;

    std::vector<ProbInterval> intervals(m.size());
    double running = 0.0;
    double lo = 0.0;
    for (std::size_t j = 0; j < order.size(); ++j) {
        running += m.states()[order[j]].p;
        const double hi = j + 1 == order.size() ? 1.0 : running / total;
        intervals[order[j]] = {lo, hi};
        lo = hi;
    }
    return intervals;
}

RandomizedPayoff optimal_payoff(const StepQuantile& q, const Market& m) {
    const std::vector<ProbInterval> intervals = comonotone_intervals(m);

    // u -> q(1-u) changes value at reflected breakpoints of q.
    std::vector<double> cuts;
    for (double b : q.breakpoints())
        if (b > 0.0) cuts.push_back(1.0 - b);
    std::sort(cuts.begin(), cuts.end());

    RandomizedPayoff payoff;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto [lo, hi] = intervals[i];
        std::vector<double> edges{lo};
        for (double c : cuts)
            if (c > lo && c < hi) edges.push_back(c);
        edges.push_back(hi);
        for (std::size_t j = 0; j + 1 < edges.size(); ++j) {
            const double mass = edges[j + 1] - edges[j];
            if (mass <= 0.0) continue;
            const double mid = 0.5 * (edges[j] + edges[j + 1]);
            payoff.entries.push_back({i, mass, q(1.0 - mid)});
        }
    }
    return payoff;
}

double expected_cost(const RandomizedPayoff& payoff, const Market& m) {
    double total = 0.0;
    for (const auto& e : payoff.entries) total += e.mass * m.states()[e.state].rho * e.value;
    return total;
}

ExpenditureSolution solve_expenditure(std::span<const StepQuantile> fsd_constraints,
                                      std::span<const StepQuantile> ssd_constraints,
                                      const Market& m) {
    detail::require(!fsd_constraints.empty() || !ssd_constraints.empty(),
                    "solve_expenditure: at least one constraint required");
    const StepQuantile fsd_bound =
        fsd_constraints.empty() ? StepQuantile() : reduce_fsd(fsd_constraints);
    const StepQuantile ssd_bound =
        ssd_constraints.empty() ? StepQuantile() : reduce_ssd(ssd_constraints);

    ExpenditureSolution sol;
    sol.envelope = ssd_minimal(fsd_bound, ssd_bound);
    sol.payoff = optimal_payoff(sol.envelope.quantile, m);
    sol.cost = price(sol.envelope.quantile, sdf_quantile(m));
    return sol;
}

} // namespace sdquant
