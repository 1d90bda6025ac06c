#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "freeconv/error.hpp"

namespace freeconv::detail {

// Bisection for a continuous function with f(lo) < 0 < f(hi) established by
// the caller (the endpoints themselves are never evaluated, so poles at the
// bracket ends are fine).  Stops when the bracket width drops below xtol or
// the midpoint can no longer be distinguished from the endpoints.
template <class F>
double bisect_signed(F&& f, double lo, double hi, double xtol,
                     int max_iter = 200) {
  for (int i = 0; i < max_iter && hi - lo > xtol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // double precision exhausted
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

// Polynomial extrapolation of (x_i, y_i) samples to x = 0 (Neville scheme).
// This is Richardson extrapolation for a ladder of step sizes x_i.
inline double extrapolate_to_zero(std::span<const double> xs,
                                  std::span<const double> ys) {
  require(xs.size() == ys.size() && !xs.empty(), errc::invalid_argument,
          "extrapolation needs matching nonempty samples");
  std::vector<double> t(ys.begin(), ys.end());
  const std::size_t n = t.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      const double x0 = xs[i], x1 = xs[i + level];
      t[i] = (x0 * t[i + 1] - x1 * t[i]) / (x0 - x1);
    }
  }
  return t[0];
}

}  // namespace freeconv::detail
