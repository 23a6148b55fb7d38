#pragma once

#include <cmath>

namespace airtime {

inline constexpr int kMaxBisectionSteps = 200;
inline constexpr double kBisectionRelTol = 1e-9;

/// Solves f(x) = target for a continuous non-decreasing f on [lo, hi].
/// Stops once |f(mid) - target| <= tol, when the bracket can no longer be
/// halved, or after kMaxBisectionSteps halvings. The caller guarantees that
/// the bracket contains a solution.
template <class F>
double bisect_increasing(F&& f, double target, double lo, double hi, double tol) {
  double mid = 0.5 * (lo + hi);
  for (int step = 0; step < kMaxBisectionSteps; ++step) {
    mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double value = f(mid);
    if (std::abs(value - target) <= tol) break;
    if (value < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

}  // namespace airtime
