#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shapes/support_fn.hpp"

namespace shapes {

enum class Metric { hausdorff, l2 };

struct FarthestResult {
  Metric metric = Metric::hausdorff;
  double alpha_star = 0.0;  // axis angle of Σ_α, in [0, π)
  double distance = 0.0;
  bool degenerate = false;
  double q_angle = 0.0;             // hausdorff: argmax of h_C
  std::vector<double> g_samples;    // l2: g at α_j = πj/512
};

/// Σ_α with α = argmax h_C (smallest angle on ties). Degenerate when the
/// near-maximal set (within 1e-6) does not fit in a 0.05 rad arc mod π.
FarthestResult farthest_hausdorff(const SupportFn& c);

/// ∫₀^π h_C(θ + α) sin θ dθ.
double g_profile(const SupportFn& c, double alpha);

/// The segment maximizing d₂(C, Σ_α): since d₂² = π³/4 + ∫h_C² − 2π g(α)
/// on class 𝒜, α* minimizes g. 512-point scan plus golden section to 1e-9.
/// Degenerate when the scanned range of g is below 1e-8.
FarthestResult farthest_l2(const SupportFn& c);

/// d_H(C, Σ_{πj/m}) for j = 0..m−1, from one shared scan of h_C.
std::vector<double> hausdorff_segment_profile(const SupportFn& c, int m);

/// Named residuals; each is ≤ 0 for a class-𝒜 body.
struct SharpInequalityReport {
  double max_h_minus_half_pi = 0.0;          // max h − π/2
  double half_pi_minus_min_plus_max = 0.0;   // π/2 − (min h + max h)
  double h1_norm_minus_16pi_over_3 = 0.0;    // ∫h² + ∫h'² − 16π/3
  double dh_sq_minus_h_sq = 0.0;             // ∫h'² − ∫h²
  double h_sq_minus_quarter_dh_sq_minus_2pi = 0.0;  // ∫h² − ¼∫h'² − 2π

  std::vector<std::pair<std::string, double>> named() const;
};

SharpInequalityReport sharp_inequality_report(const SupportFn& c);

}  // namespace shapes
