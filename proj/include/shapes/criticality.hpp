#pragma once

#include <array>

#include "shapes/support_fn.hpp"
#include "shapes/weingarten.hpp"

namespace shapes {

/// ∂a_i/∂θ_j of the perimeter-2π side lengths (row i, column j).
std::array<std::array<double, 3>, 3> length_partials(const TriangleSpec& t);

/// Closed forms for the first row: ∂a₁/∂θ₂, ∂a₁/∂θ₃, ∂a₁/∂θ₁ written with
/// half-angle cotangents and sines.
std::array<double, 3> a1_partials_closed_form(const TriangleSpec& t);

struct CriticalityReport {
  // Arc integrals of (h_T − h_C) against shifted sines.
  double i1 = 0, i2 = 0, j1 = 0, j2 = 0, k1 = 0, k2 = 0;
  double i = 0;  // ∫(h_T − h_C) h_T
  std::array<std::array<double, 3>, 3> partials{};
  /// Stationarity conditions; each equals ½ ∂/∂θ_j ∫(h_T − h_C)².
  std::array<double, 3> stationarity{};
  /// I − (stated multiple of I₁, J₂, J₁, K₂, K₁, I₂).
  std::array<double, 6> relation_residuals{};
  /// Same with the stated multiples scaled by −2π.
  std::array<double, 6> corrected_relation_residuals{};
  double middle_condition = 0.0;  // I₁/sin²(g₁/2) + J₂/sin²(g₂/2)
  double product_identity = 0.0;  // I − (a₁I₁ − a₃J₂)
  double equilateral_identity = 0.0;  // I − (2π/9)(I₁ − I₂ + J₁ − J₂ + K₁ − K₂)
  std::array<double, 3> fd_gradient{};  // central differences of ∫(h_T − h_C)², step 1e-5
};

CriticalityReport triangle_criticality(const TriangleSpec& t, const SupportFn& c);

/// ∫(h_T − h_C)² as a function of the angles.
double triangle_l2_sq(const TriangleSpec& t, const SupportFn& c);

struct ClosureResiduals {
  double cos_sum = 0.0;
  double sin_sum = 0.0;
  double denominator = 0.0;  // Σ sines − 4 Π sin(gap/2)
};

ClosureResiduals closure_identities(const TriangleSpec& t);

/// Minimizer of ∫(h_T − h_C)² over triangles: multistart search followed by
/// Newton steps on a finite-difference gradient and Hessian.
TriangleSpec closest_triangle(const SupportFn& c);

}  // namespace shapes
