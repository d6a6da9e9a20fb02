#pragma once

// Brute-force references used to cross-check the library.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

constexpr double pi = 3.14159265358979323846;

// Midpoint rule on [lo, hi] with n cells.
inline double integrate(const std::function<double(double)>& f, double lo, double hi, int n = 200000) {
  const double dx = (hi - lo) / n;
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += f(lo + (i + 0.5) * dx);
  return s * dx;
}

// Midpoint rule on each piece between sorted breakpoints in [lo, hi].
inline double integrate_pieces(const std::function<double(double)>& f, double lo, double hi,
                               std::vector<double> breaks, int n = 400000) {
  breaks.push_back(lo);
  breaks.push_back(hi);
  std::sort(breaks.begin(), breaks.end());
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = std::max(lo, breaks[i]), b = std::min(hi, breaks[i + 1]);
    if (b <= a) continue;
    const int m = std::max(16, static_cast<int>(n * (b - a) / (hi - lo)));
    s += integrate(f, a, b, m);
  }
  return s;
}

inline double sup(const std::function<double(double)>& f, double lo, double hi, int n = 200000) {
  double m = -1e300;
  for (int i = 0; i <= n; ++i) m = std::max(m, f(lo + (hi - lo) * i / n));
  return m;
}

inline double argmax(const std::function<double(double)>& f, double lo, double hi, int n = 200000) {
  double m = -1e300, at = lo;
  for (int i = 0; i <= n; ++i) {
    const double t = lo + (hi - lo) * i / n;
    const double v = f(t);
    if (v > m) {
      m = v;
      at = t;
    }
  }
  return at;
}

}  // namespace oracle
