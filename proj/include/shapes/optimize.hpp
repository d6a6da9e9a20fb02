#pragma once

#include <array>
#include <functional>

namespace shapes {

struct ScalarOptimum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for a maximum of f on [lo, hi], stopping when the
/// bracket is shorter than tol. The returned point is the best evaluated one,
/// including the bracket ends.
ScalarOptimum golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                                 double tol = 1e-9);

struct NelderMeadOptions {
  double initial_step = 0.2;
  double x_tol = 1e-11;
  double f_tol = 1e-15;
  int max_evaluations = 4000;
};

template <std::size_t N>
struct SimplexOptimum {
  std::array<double, N> x{};
  double value = 0.0;
  int evaluations = 0;
};

/// Nelder-Mead minimization in three dimensions (the triangle-angle space).
/// f may return +inf to reject a point.
SimplexOptimum<3> nelder_mead_min(const std::function<double(const std::array<double, 3>&)>& f,
                                  const std::array<double, 3>& x0,
                                  const NelderMeadOptions& opts = {});

/// Radical-inverse (Halton) coordinate for the given index and prime base.
double halton(unsigned index, unsigned base);

}  // namespace shapes
