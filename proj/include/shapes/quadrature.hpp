#pragma once

#include <functional>
#include <vector>

namespace shapes {

/// A set of nodes and weights. Integration is a weighted sum.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// Composite trapezoid on n equispaced nodes of [0, 2π). Spectrally accurate
/// for smooth periodic integrands.
QuadratureRule periodic_trapezoid(int n);

/// Gauss-Legendre panels on [lo, hi], split at the given interior breakpoints
/// and further subdivided so that no panel exceeds max_panel.
QuadratureRule gauss_panels(double lo, double hi, const std::vector<double>& breaks,
                            double max_panel);

/// Piecewise Gauss-Legendre over the whole circle, split at the breakpoints
/// (angles in any range; reduced mod 2π). With no breakpoints the circle is
/// covered by uniform panels.
QuadratureRule periodic_gauss(const std::vector<double>& breaks, double max_panel);

/// Default panel width for piecewise rules.
inline constexpr double kDefaultPanel = 0.2617993877991494;  // π/12

/// Trapezoid node count used when no shape-specific rule applies.
inline constexpr int kDefaultTrapezoidNodes = 2048;

}  // namespace shapes
