#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "shapes/measure.hpp"
#include "shapes/support_fn.hpp"

namespace shapes {

/// Green kernel for h'' + h = R under vanishing first harmonics:
/// h(θ) = κ ∫_{−π}^{π} G₀(t) R(θ + t) dt with G₀(t) = (1 − |t|/π) sin|t|, κ = ½.
/// G₀ satisfies G₀'' + G₀ = 2δ₀ − (2/π)cos t, so the cos term drops out
/// against any R with zero first moments.
namespace green {

inline constexpr double kScale = 0.5;

/// G₀(t), 2π-periodic and even.
double kernel(double t);

/// G₀'(t); at t = 0 returns the left limit G₀'(0−) = −1.
double kernel_derivative(double t);

/// κ·[G₀(τ) + G₀(τ − π/2) + G₀(−τ) + G₀(−τ − π/2)].
double g4(double tau);

}  // namespace green

/// Thrown by solve() when the measure has nonzero first moments.
class ClosureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Outer-normal angles of a perimeter-2π triangle.
struct TriangleSpec {
  std::array<double, 3> theta{};

  /// Empty when 0 < θ₂−θ₁ < π, 0 < θ₃−θ₂ < π, 0 < 2π+θ₁−θ₃ < π all hold;
  /// otherwise names the first violated inequality.
  std::optional<std::string> violation() const;

  /// The three gaps θ₂−θ₁, θ₃−θ₂, 2π+θ₁−θ₃.
  std::array<double, 3> gaps() const;

  /// Smallest distance of a gap to 0 or π.
  double margin() const;

  /// Side lengths from the law of sines, a₁ ∝ sin(θ₃−θ₂), a₂ ∝ sin(θ₁−θ₃),
  /// a₃ ∝ sin(θ₂−θ₁), normalized to sum 2π.
  std::array<double, 3> lengths() const;

  /// Same triangle with angles reduced to [0, 2π) and cyclically rotated so
  /// they are increasing.
  TriangleSpec canonical() const;
};

/// Throws std::invalid_argument naming the violated inequality.
void require_valid(const TriangleSpec& t);

/// Solves h'' + h = R. Atoms-only measures give an exact PolygonForm;
/// a density adds a corrected-trapezoid convolution and the result is
/// sampled on the density's grid.
SupportFn solve(const CurvatureMeasure& r);

/// Density-only solve for a trigonometric curvature ρ = c0 + Σ terms (no
/// k = 1 terms allowed): h has coefficients ρ_k/(1 − k²).
SupportFn solve_trigonometric(double c0, const std::vector<FourierTerm>& terms);

/// Exact support function of the triangle via the piecewise closed form.
SupportFn triangle_support(const TriangleSpec& t);

/// Polygon with given normals and side lengths. Two antipodal sides of
/// length π collapse to a segment. With normalize=true the lengths are
/// rescaled to perimeter 2π.
SupportFn polygon_support(const std::vector<double>& normals, const std::vector<double>& lengths,
                          bool normalize = false);

/// R = h'' + h: exact atoms for segment/polygon/triangle, density on an
/// AngleGrid(density_n) for Fourier (exact) and grid (second differences).
CurvatureMeasure curvature_of(const SupportFn& h, int density_n = 720);

/// Support set threshold used by curvature_of reports: 1e-6 of the mass.
inline constexpr double kSupportThreshold = 1e-6;

}  // namespace shapes
