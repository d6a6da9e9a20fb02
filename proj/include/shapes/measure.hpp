#pragma once

#include <Eigen/Core>
#include <vector>

namespace shapes {

struct Atom {
  double angle = 0.0;   // radians, [0, 2π)
  double weight = 0.0;  // nonnegative
};

/// Radius-of-curvature measure R = h'' + h: point masses plus an optional
/// density sampled on the uniform grid θ_i = 2πi/n (n = density.size()).
struct CurvatureMeasure {
  std::vector<Atom> atoms;
  std::vector<double> density;

  bool has_density() const { return !density.empty(); }

  /// Total mass: atom weights plus trapezoid quadrature of the density.
  double mass() const;

  /// (∫R cos θ, ∫R sin θ).
  Eigen::Vector2d first_moment() const;

  /// Angles carrying mass above the threshold: atoms, then density nodes
  /// whose cell mass exceeds it.
  std::vector<double> support(double threshold) const;
};

}  // namespace shapes
