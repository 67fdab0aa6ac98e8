#pragma once

#include <stdexcept>
#include <string>

namespace sdquant {

/// Library-wide absolute tolerance for comparing probability levels and
/// payoff values. Canonicalization, equality and all feasibility slack
/// checks use this single constant.
inline constexpr double kTol = 1e-12;

/// Crossing points computed by linear interpolation snap to an existing
/// knot when closer than this, so no zero-length segments are created.
inline constexpr double kKnotSnap = 1e-14;

/// Acceptance band for convexity when extracting right slopes. Slopes may
/// decrease by at most this much before the input is rejected as
/// non-convex; smaller dips are treated as rounding and clamped.
inline constexpr double kSlopeTol = 1e-9;

namespace detail {

inline void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Postcondition guard: a failure here is an internal bug, not a user error.
inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error("internal invariant violated: " + msg);
}

} // namespace detail

} // namespace sdquant
