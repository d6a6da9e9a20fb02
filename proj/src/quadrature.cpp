#include "shapes/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>

#include "shapes/angle.hpp"

namespace shapes {
namespace {

constexpr unsigned kGaussOrder = 12;

// Reference nodes/weights on [-1, 1], expanded from Boost's half-tables.
struct ReferenceRule {
  std::vector<double> x, w;
  ReferenceRule() {
    using G = boost::math::quadrature::gauss<double, kGaussOrder>;
    const auto& ax = G::abscissa();
    const auto& wt = G::weights();
    for (std::size_t i = 0; i < ax.size(); ++i) {
      if (ax[i] == 0.0) {
        x.push_back(0.0);
        w.push_back(wt[i]);
      } else {
        x.push_back(ax[i]);
        w.push_back(wt[i]);
        x.push_back(-ax[i]);
        w.push_back(wt[i]);
      }
    }
  }
};

const ReferenceRule& reference() {
  static const ReferenceRule rule;
  return rule;
}

void append_panels(QuadratureRule& rule, double lo, double hi, double max_panel) {
  const double len = hi - lo;
  if (len <= 0.0) return;
  const int panels = std::max(1, static_cast<int>(std::ceil(len / max_panel)));
  const double width = len / panels;
  const auto& ref = reference();
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * width;
    const double mid = a + 0.5 * width;
    for (std::size_t k = 0; k < ref.x.size(); ++k) {
      rule.nodes.push_back(mid + 0.5 * width * ref.x[k]);
      rule.weights.push_back(0.5 * width * ref.w[k]);
    }
  }
}

}  // namespace

QuadratureRule periodic_trapezoid(int n) {
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.assign(static_cast<std::size_t>(n), kTwoPi / n);
  for (int i = 0; i < n; ++i) rule.nodes[static_cast<std::size_t>(i)] = kTwoPi * i / n;
  return rule;
}

QuadratureRule gauss_panels(double lo, double hi, const std::vector<double>& breaks,
                            double max_panel) {
  std::vector<double> cuts{lo};
  for (double b : breaks) {
    if (b > lo && b < hi) cuts.push_back(b);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  QuadratureRule rule;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    append_panels(rule, cuts[i], cuts[i + 1], max_panel);
  }
  return rule;
}

QuadratureRule periodic_gauss(const std::vector<double>& breaks, double max_panel) {
  std::vector<double> cuts;
  cuts.reserve(breaks.size());
  for (double b : breaks) cuts.push_back(wrap_2pi(b));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-15; }),
             cuts.end());
  if (cuts.empty()) return gauss_panels(0.0, kTwoPi, {}, max_panel);
  // Integrate over [c0, c0 + 2π) so that every breakpoint is a panel edge.
  const double start = cuts.front();
  std::vector<double> interior;
  for (std::size_t i = 1; i < cuts.size(); ++i) interior.push_back(cuts[i]);
  return gauss_panels(start, start + kTwoPi, interior, max_panel);
}

}  // namespace shapes
