#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace shapes {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduce an angle to [0, 2π).
inline double wrap_2pi(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

/// Reduce an angle to [0, π).
inline double wrap_pi(double theta) {
  double r = std::fmod(theta, kPi);
  if (r < 0.0) r += kPi;
  if (r >= kPi) r -= kPi;
  return r;
}

/// Reduce an angle to [−π, π).
inline double wrap_signed(double theta) { return wrap_2pi(theta + kPi) - kPi; }

/// Shortest distance between two angles on the circle of circumference `period`.
inline double circular_distance(double a, double b, double period = kTwoPi) {
  double d = std::fmod(std::abs(a - b), period);
  return std::min(d, period - d);
}

/// Uniform grid on the circle, θ_i = 2πi/n.
class AngleGrid {
 public:
  explicit AngleGrid(int n) : n_(n) {
    if (n < 8 || n % 2 != 0) {
      throw std::invalid_argument("AngleGrid: n must be even and >= 8");
    }
  }

  int size() const { return n_; }
  double spacing() const { return kTwoPi / n_; }
  double node(int i) const { return kTwoPi * static_cast<double>(i) / n_; }

  std::vector<double> nodes() const {
    std::vector<double> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = node(i);
    return out;
  }

  /// Node index at the antipode of node i.
  int antipode(int i) const { return (i + n_ / 2) % n_; }

 private:
  int n_;
};

}  // namespace shapes
