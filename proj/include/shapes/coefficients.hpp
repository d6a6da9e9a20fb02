#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "shapes/support_fn.hpp"

namespace shapes {

class CoefficientError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Value `inside` on the arc |θ − center| < width (circular distance),
/// so width is the half-width of the arc.
struct Bump {
  double center = 0.0;
  double width = 0.0;
  double inside = 0.0;
};

/// A bounded coefficient function on the circle.
class CoeffFn {
 public:
  enum class Kind { constant, grid, bumps, fourier };

  static CoeffFn constant(double v);
  /// Linear interpolation of samples on θ_i = 2πi/n (n ≥ 2).
  static CoeffFn grid(std::vector<double> samples);
  /// Piecewise constant; the first bump containing θ wins, `outside` elsewhere.
  static CoeffFn bumps(std::vector<Bump> bumps, double outside);
  static CoeffFn fourier(double c0, std::vector<FourierTerm> terms);

  CoeffFn() = default;

  double value(double theta) const;
  /// Mean over [lo, hi] (exact for piecewise-constant and piecewise-linear data).
  double average(double lo, double hi) const;
  /// Discontinuities or kinks in [0, 2π).
  std::vector<double> breaks() const;
  /// Grid size when sampled, else 0.
  int sample_count() const;
  double min() const;
  bool is_zero() const;

  Kind kind() const { return kind_; }
  double const_value() const { return c0_; }
  const std::vector<double>& samples() const { return samples_; }
  const std::vector<Bump>& bump_list() const { return bumps_; }
  double outside() const { return c0_; }
  double fourier_c0() const { return c0_; }
  const std::vector<FourierTerm>& fourier_terms() const { return terms_; }

 private:
  Kind kind_ = Kind::constant;
  double c0_ = 0.0;  // constant, bump outside value, or Fourier mean
  std::vector<double> samples_;
  std::vector<Bump> bumps_;
  std::vector<FourierTerm> terms_;
};

/// J(K) = ∫ a h² + b h'² + c h + d h'.
struct QuadCoeffs {
  CoeffFn a, b, c, d;
};

/// Rejects a < 0 or b < 0 (beyond 1e-12) and coefficient sets where
/// {a + b ≤ 1e-12} covers a fraction ≥ 1e-3 of the circle.
void validate(const QuadCoeffs& q);

/// Breakpoints of all four coefficients.
std::vector<double> coefficient_breaks(const QuadCoeffs& q);
int coefficient_sample_count(const QuadCoeffs& q);

/// The bump profile: `inside` on ε-arcs around each center, `outside` elsewhere.
CoeffFn bump_profile(const std::vector<double>& centers, double eps, double inside, double outside);

/// A random valid coefficient set (a, b ≥ 0 from constants, bumps or
/// low-order nonnegative trigonometric sums; c, d small trigonometric sums).
QuadCoeffs random_quad_coeffs(std::uint64_t seed);

}  // namespace shapes
