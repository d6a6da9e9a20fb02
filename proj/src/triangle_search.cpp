#include <algorithm>
#include <cmath>
#include <limits>

#include "shapes/optimize.hpp"
#include "shapes/quad_functional.hpp"

namespace shapes {
namespace {

constexpr double kMarginFloor = 1e-3;

TriangleSpec from_params(const std::array<double, 3>& x) {
  return TriangleSpec{{x[0], x[0] + x[1], x[0] + x[1] + x[2]}};
}

std::vector<std::array<double, 3>> halton_starts(int count) {
  std::vector<std::array<double, 3>> out;
  for (unsigned i = 1; static_cast<int>(out.size()) < count && i < 100000; ++i) {
    const double u = halton(i, 3);
    const double v = halton(i, 5);
    const double lo = std::min(u, v);
    const double hi = std::max(u, v);
    const std::array<double, 3> g{kTwoPi * lo, kTwoPi * (hi - lo), kTwoPi * (1.0 - hi)};
    if (g[0] >= kPi || g[1] >= kPi || g[2] >= kPi) continue;
    if (std::min({g[0], g[1], g[2]}) < 2.0 * kMarginFloor) continue;
    out.push_back({kTwoPi * halton(i, 2), g[0], g[1]});
  }
  return out;
}

}  // namespace

TriangleSpec minimize_over_triangles(const std::function<double(const TriangleSpec&)>& f, int starts) {
  const auto objective = [&](const std::array<double, 3>& x) {
    const TriangleSpec t = from_params(x);
    if (t.violation()) return std::numeric_limits<double>::infinity();
    const double margin = t.margin();
    double penalty = 0.0;
    if (margin < kMarginFloor) {
      const double s = 1.0 - margin / kMarginFloor;
      penalty = 10.0 * s * s;
    }
    return f(t) + penalty;
  };
  // Coarse pass from every start, then tight polishing of the best few.
  NelderMeadOptions coarse;
  coarse.initial_step = 0.2;
  coarse.x_tol = 1e-6;
  coarse.max_evaluations = 400;
  NelderMeadOptions fine = coarse;
  fine.initial_step = 0.01;
  fine.x_tol = 1e-10;
  fine.max_evaluations = 2000;
  constexpr std::size_t kPolish = 3;

  std::vector<std::pair<double, std::array<double, 3>>> found;
  for (const auto& x0 : halton_starts(starts)) {
    const auto r = nelder_mead_min(objective, x0, coarse);
    found.emplace_back(r.value, r.x);
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (found.size() > kPolish) found.resize(kPolish);

  TriangleSpec best{{0.0, kTwoPi / 3.0, 2.0 * kTwoPi / 3.0}};
  double best_value = std::numeric_limits<double>::infinity();
  for (const auto& [v, x] : found) {
    const auto r = nelder_mead_min(objective, x, fine);
    const auto& [value, at] = r.value < v ? std::pair{r.value, r.x} : std::pair{v, x};
    if (value < best_value) {
      best_value = value;
      best = from_params(at).canonical();
    }
  }
  return best;
}

TriangleSearchResult maximize_over_triangles(const QuadCoeffs& coeffs) {
  TriangleSearchResult r;
  r.triangle = minimize_over_triangles([&](const TriangleSpec& t) { return -eval_J(coeffs, triangle_support(t)); });
  r.triangle_value = eval_J(coeffs, triangle_support(r.triangle));

  constexpr int m = 1024;
  const auto seg = [&](double a) { return eval_J(coeffs, SupportFn::segment(a)); };
  int jbest = 0;
  double vbest = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < m; ++j) {
    const double v = seg(kPi * j / m);
    if (v > vbest) {
      vbest = v;
      jbest = j;
    }
  }
  const auto opt = golden_section_max(seg, kPi * (jbest - 1) / m, kPi * (jbest + 1) / m, 1e-10);
  r.segment_alpha = opt.value > vbest ? wrap_pi(opt.x) : kPi * jbest / m;
  r.segment_value = std::max(opt.value, vbest);

  r.segment_wins = r.segment_value >= r.triangle_value;
  r.value = std::max(r.segment_value, r.triangle_value);
  return r;
}

SupportFn TriangleSearchResult::best() const {
  return segment_wins ? SupportFn::segment(segment_alpha) : triangle_support(triangle);
}

}  // namespace shapes
