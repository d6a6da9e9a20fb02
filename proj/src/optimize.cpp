#include "shapes/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace shapes {

ScalarOptimum golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                                 double tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  ScalarOptimum best{lo, f(lo)};
  const double fhi = f(hi);
  if (fhi > best.value) best = {hi, fhi};
  auto consider = [&](double x, double v) {
    if (v > best.value) best = {x, v};
  };
  consider(c, fc);
  consider(d, fd);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
      consider(d, fd);
    }
  }
  return best;
}

SimplexOptimum<3> nelder_mead_min(const std::function<double(const std::array<double, 3>&)>& f,
                                  const std::array<double, 3>& x0,
                                  const NelderMeadOptions& opts) {
  constexpr std::size_t N = 3;
  using Point = std::array<double, N>;
  std::array<Point, N + 1> simplex{};
  std::array<double, N + 1> values{};
  int evals = 0;
  auto eval = [&](const Point& p) {
    ++evals;
    const double v = f(p);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };

  simplex[0] = x0;
  for (std::size_t i = 0; i < N; ++i) {
    simplex[i + 1] = x0;
    simplex[i + 1][i] += opts.initial_step;
  }
  for (std::size_t i = 0; i <= N; ++i) values[i] = eval(simplex[i]);

  std::array<std::size_t, N + 1> order{};
  while (evals < opts.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order[0];
    const std::size_t worst = order[N];
    const std::size_t second_worst = order[N - 1];

    double diameter = 0.0;
    for (std::size_t i = 0; i <= N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        diameter = std::max(diameter, std::abs(simplex[i][k] - simplex[best][k]));
      }
    }
    const double spread = values[worst] - values[best];
    if (diameter < opts.x_tol || (std::isfinite(spread) && spread < opts.f_tol && diameter < 1e-6)) {
      break;
    }

    Point centroid{};
    for (std::size_t i = 0; i <= N; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < N; ++k) centroid[k] += simplex[i][k] / N;
    }
    auto along = [&](double t) {
      Point p{};
      for (std::size_t k = 0; k < N; ++k) p[k] = centroid[k] + t * (simplex[worst][k] - centroid[k]);
      return p;
    };

    const Point reflected = along(-1.0);
    const double fr = eval(reflected);
    if (fr < values[best]) {
      const Point expanded = along(-2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        simplex[worst] = expanded;
        values[worst] = fe;
      } else {
        simplex[worst] = reflected;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    const Point contracted = along(outside ? -0.5 : 0.5);
    const double fc = eval(contracted);
    if (fc < std::min(fr, values[worst])) {
      simplex[worst] = contracted;
      values[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= N; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < N; ++k) {
        simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
      }
      values[i] = eval(simplex[i]);
    }
  }

  const auto it = std::min_element(values.begin(), values.end());
  const auto idx = static_cast<std::size_t>(it - values.begin());
  return {simplex[idx], values[idx], evals};
}

double halton(unsigned index, unsigned base) {
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * (index % base);
    index /= base;
  }
  return r;
}

}  // namespace shapes
