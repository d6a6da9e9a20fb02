#pragma once

#include <Eigen/Core>
#include <array>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "shapes/angle.hpp"
#include "shapes/quadrature.hpp"

namespace shapes {

/// Raised when shape data cannot describe a convex set (bad closure,
/// negative lengths, malformed samples).
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FourierTerm {
  int k = 0;
  double a = 0.0;  // cos kθ
  double b = 0.0;  // sin kθ
  bool operator==(const FourierTerm&) const = default;
};

class SupportFn;

/// Samples h(θ_i) on θ_i = 2πi/n, linearly interpolated.
struct GridForm {
  std::vector<double> samples;
};

/// Σ_α, the segment [−iπ/2·e^{iα}, iπ/2·e^{iα}]; h = (π/2)|sin(θ−α)|.
struct SegmentForm {
  double alpha = 0.0;
};

/// Closed polygon given by outer normals and side lengths; evaluated through
/// the Green kernel, so its Steiner point sits at the origin.
struct PolygonForm {
  std::vector<double> normals;
  std::vector<double> lengths;
};

/// Triangle of perimeter 2π evaluated with the piecewise closed form
/// φ(θ) + a₁sin(θ−θ₁)χ[θ₁,θ₂) − a₃sin(θ−θ₃)χ[θ₂,θ₃). Normals sorted in [0, 2π).
struct TriangleForm {
  std::array<double, 3> normals{};
  std::array<double, 3> lengths{};
};

/// h = c0 + Σ a_k cos kθ + b_k sin kθ.
struct FourierForm {
  double c0 = 0.0;
  std::vector<FourierTerm> terms;
};

struct MinkowskiTerm {
  double weight = 0.0;
  std::shared_ptr<const SupportFn> shape;
};

/// Minkowski combination Σ t_i K_i, i.e. h = Σ t_i h_i with t_i ≥ 0.
struct MinkowskiForm {
  std::vector<MinkowskiTerm> terms;
};

/// Support function of a planar convex set. Immutable value type.
class SupportFn {
 public:
  using Repr =
      std::variant<GridForm, SegmentForm, PolygonForm, TriangleForm, FourierForm, MinkowskiForm>;

  static SupportFn grid(std::vector<double> samples);
  static SupportFn segment(double alpha);
  /// Validates lengths > 0 and closure |Σ a_j e^{iθ_j}| ≤ 1e-8; sorts by normal.
  static SupportFn polygon(std::vector<double> normals, std::vector<double> lengths);
  static SupportFn triangle(const TriangleForm& form);
  static SupportFn fourier(double c0, std::vector<FourierTerm> terms = {});
  static SupportFn disc(double radius = 1.0) { return fourier(radius); }
  static SupportFn minkowski(const std::vector<std::pair<double, SupportFn>>& terms);

  double value(double theta) const;
  /// h'(θ); at a kink this is the right derivative.
  double derivative(double theta) const;

  /// Angles in [0, 2π) where h' jumps (exact forms only).
  std::vector<double> kinks() const;
  /// True when any part of the shape is grid samples.
  bool is_sampled() const;
  /// Largest grid size among sampled parts (0 if none).
  int sample_count() const;

  const Repr& repr() const { return repr_; }
  std::string kind() const;

  template <class T>
  const T* as() const {
    return std::get_if<T>(&repr_);
  }

 private:
  explicit SupportFn(Repr r) : repr_(std::move(r)) {}
  Repr repr_;
};

struct MinMax {
  double min = 0.0;
  double max = 0.0;
  double argmin = 0.0;
  double argmax = 0.0;
};

double evaluate(const SupportFn& h, double theta);

/// ∫₀^{2π} h dθ.
double perimeter(const SupportFn& h);

/// (1/π)(∫h cos θ, ∫h sin θ).
Eigen::Vector2d steiner(const SupportFn& h);

/// (2π/P)(h − s·(cos θ, sin θ)). Throws ShapeError when P ≤ 1e-12.
SupportFn normalize_to_class_A(const SupportFn& h);

/// Global extrema of h on the circle; ties go to the smallest angle in [0, 2π).
MinMax min_max_h(const SupportFn& h);

/// ‖h₁ − h₂‖_∞: scan at max(n₁, n₂, 2048) nodes plus all kinks, then golden
/// refinement of the five largest local maxima.
double hausdorff_distance(const SupportFn& h1, const SupportFn& h2);

/// Samples of h on θ_i = 2πi/n plus its exact breakpoints, for reuse when one
/// shape enters many sup-norm queries. The referenced shape must outlive it.
struct ScanCache {
  const SupportFn* h = nullptr;
  std::vector<double> values;
  std::vector<double> exact;
};

ScanCache scan_cache(const SupportFn& h, int n);

/// Same as hausdorff_distance on the shapes behind two caches of equal size.
double hausdorff_distance(const ScanCache& a, const ScanCache& b);

/// (∫(h₁ − h₂)²)^{1/2}.
double l2_distance(const SupportFn& h1, const SupportFn& h2);

/// x(θ) = h(θ)(cos θ, sin θ) + h'(θ)(−sin θ, cos θ) at the grid nodes.
std::vector<Eigen::Vector2d> boundary_points(const SupportFn& h, const AngleGrid& grid);

/// The set rotated by φ: h_rot(θ) = h(θ − φ). Grid forms are resampled by
/// linear interpolation.
SupportFn rotated(const SupportFn& h, double phi);

/// The set translated by v.
SupportFn translated(const SupportFn& h, const Eigen::Vector2d& v);

/// Quadrature rule adapted to the given shapes: piecewise Gauss split at all
/// kinks (plus extra breakpoints) for exact forms, trapezoid on at least
/// 2048 nodes when anything is sampled or nothing has kinks.
QuadratureRule integration_rule(std::span<const SupportFn* const> shapes,
                                const std::vector<double>& extra_breaks = {},
                                int extra_sample_count = 0);

/// ∫h² and ∫h'² over the circle.
double integral_h_sq(const SupportFn& h);
double integral_dh_sq(const SupportFn& h);

struct ConvexityReport {
  bool convex = true;
  double worst = 0.0;       // most negative value of the curvature check
  double tolerance = 0.0;
  double worst_angle = 0.0;
};

/// Checks h'' + h ≥ −tol: exactly for segment/polygon/triangle, on the
/// Fourier curvature for trigonometric forms, and by D²h + h for grids
/// (tolerance 1e-6·n/(2π)).
ConvexityReport convexity(const SupportFn& h);

struct ClassAResiduals {
  double perimeter_error = 0.0;  // |P − 2π|
  double steiner_norm = 0.0;     // |s|
  double min_h = 0.0;
};

ClassAResiduals class_a_residuals(const SupportFn& h);

/// Tolerance on the class-𝒜 invariants: 1e-9 for exact forms, 1e-6 for grids.
double class_a_tolerance(const SupportFn& h);

}  // namespace shapes
