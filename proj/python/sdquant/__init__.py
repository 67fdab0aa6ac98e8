"""Quantile-function algebra, stochastic dominance checks, minimal-quantile
envelopes and expenditure minimization on scenario markets."""

from ._sdquant import (
    DominanceReport,
    EnvelopeSolution,
    ExpenditureSolution,
    Market,
    MarketState,
    PayoffEntry,
    PiecewiseLinearFn,
    ProbInterval,
    RandomizedPayoff,
    StepQuantile,
    comonotone_intervals,
    expected_cost,
    fsd_check,
    integrate,
    optimal_payoff,
    oracles,
    pointwise_max,
    price,
    reduce_fsd,
    reduce_ssd,
    right_slopes,
    running_max,
    sdf_quantile,
    solve_expenditure,
    ssd_check,
    ssd_minimal,
    upper_envelope,
)

__all__ = [
    "DominanceReport",
    "EnvelopeSolution",
    "ExpenditureSolution",
    "Market",
    "MarketState",
    "PayoffEntry",
    "PiecewiseLinearFn",
    "ProbInterval",
    "RandomizedPayoff",
    "StepQuantile",
    "comonotone_intervals",
    "expected_cost",
    "fsd_check",
    "integrate",
    "optimal_payoff",
    "oracles",
    "pointwise_max",
    "price",
    "reduce_fsd",
    "reduce_ssd",
    "right_slopes",
    "running_max",
    "sdf_quantile",
    "solve_expenditure",
    "ssd_check",
    "ssd_minimal",
    "upper_envelope",
]

__version__ = "0.1.0"
