#pragma once

#include <span>
#include <vector>

#include "sdquant/envelope.hpp"
#include "sdquant/step_quantile.hpp"

namespace sdquant {

/// One scenario: probability and stochastic discount factor value.
struct MarketState {
    double p = 0.0;
    double rho = 0.0;
};

/// Finite complete market given by scenario probabilities and strictly
/// positive discount factor values. Probabilities must sum to 1 within
/// kTol.
class Market {
public:
    explicit Market(std::vector<MarketState> states);

    const std::vector<MarketState>& states() const { return states_; }
    std::size_t size() const { return states_.size(); }

private:
    std::vector<MarketState> states_;
};

/// Payoff entry: part of a state's probability mass paying a fixed value.
/// States may be split into sub-pieces so the payoff can realize an exact
/// distribution even on a coarse scenario grid.
struct PayoffEntry {
    std::size_t state = 0;
    double mass = 0.0;
    double value = 0.0;
};

struct RandomizedPayoff {
    std::vector<PayoffEntry> entries;
};

/// Quantile function of the discount factor under the scenario
/// probabilities.
StepQuantile sdf_quantile(const Market& m);

/// Cheapest cost of any payoff distributed as q, the rearrangement bound
/// integral of q(s) * q_rho(1-s) over [0,1]. Exact on the merged grid of
/// q's breakpoints and q_rho's reflected breakpoints.
double price(const StepQuantile& q, const StepQuantile& q_rho);

/// Assigns each state a probability interval so that states appear in
/// increasing discount factor order (ties keep input order) and the
/// discount factor quantile is constant at rho_i on state i's interval.
std::vector<ProbInterval> comonotone_intervals(const Market& m);

/// Payoff paying q(1-u) for u in each state's comonotone interval: high
/// payoffs land in cheap states. Its distribution is exactly q and its
/// expected cost attains price(q, sdf_quantile(m)).
RandomizedPayoff optimal_payoff(const StepQuantile& q, const Market& m);

/// Expected cost sum(mass * rho_state * value) of a payoff.
double expected_cost(const RandomizedPayoff& payoff, const Market& m);

/// Full expenditure minimization under mixed dominance constraints.
struct ExpenditureSolution {
    EnvelopeSolution envelope;
    RandomizedPayoff payoff;
    double cost = 0.0;
};

/// Reduces the constraint lists, solves for the SSD-minimal quantile and
/// realizes it as a cheapest payoff. A missing side defaults to the zero
/// quantile (vacuous); throws if both lists are empty.
ExpenditureSolution solve_expenditure(std::span<const StepQuantile> fsd_constraints,
                                      std::span<const StepQuantile> ssd_constraints,
                                      const Market& m);

} // namespace sdquant
