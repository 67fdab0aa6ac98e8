#pragma once

#include <cstddef>
#include <vector>

#include "sdquant/common.hpp"

namespace sdquant {

class StepQuantile;

/// A continuous piecewise-linear function on [0,1], stored as knots with
/// strictly increasing abscissae spanning exactly [0,1]. Construction
/// canonicalizes by dropping interior knots where the slope does not
/// change by more than kTol.
class PiecewiseLinearFn {
public:
    /// The zero function.
    PiecewiseLinearFn();

    PiecewiseLinearFn(std::vector<double> xs, std::vector<double> ys);

    /// Linear interpolation; x must lie in [0,1]. Exact at knots.
    double operator()(double x) const;

    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }
    std::size_t knot_count() const { return xs_.size(); }

    /// Slope of the segment starting at knot i (i < knot_count()-1).
    double slope(std::size_t i) const;

    friend PiecewiseLinearFn operator+(const PiecewiseLinearFn& a, const PiecewiseLinearFn& b);
    friend PiecewiseLinearFn operator-(const PiecewiseLinearFn& a, const PiecewiseLinearFn& b);

private:
    std::vector<double> xs_;
    std::vector<double> ys_;
};

/// Exact integral t -> ∫_0^t q; continuous, convex, increasing. The last
/// knot value is the total mean of the distribution.
PiecewiseLinearFn integrate(const StepQuantile& q);

/// Right derivative of a convex increasing piecewise-linear function.
/// Throws std::invalid_argument when slopes decrease by more than
/// kSlopeTol or start below -kSlopeTol.
StepQuantile right_slopes(const PiecewiseLinearFn& p);

bool approx_equal(const PiecewiseLinearFn& a, const PiecewiseLinearFn& b, double tol = kTol);

/// Sorted union of two knot grids with near-duplicates (within kTol)
/// collapsed and the endpoints 0 and 1 kept exact.
std::vector<double> merged_knots(const std::vector<double>& a, const std::vector<double>& b);

} // namespace sdquant
