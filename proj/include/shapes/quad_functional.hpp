#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shapes/coefficients.hpp"
#include "shapes/measure.hpp"
#include "shapes/support_fn.hpp"
#include "shapes/weingarten.hpp"

namespace shapes {

/// ∫ a h² + b h'² + c h + d h', piecewise Gauss split at the kinks of h and
/// the coefficient breakpoints (trapezoid when anything is sampled).
double eval_J(const QuadCoeffs& q, const SupportFn& h);

/// Discretized problem J(w) = wᵀMw + qᵀw over weights w on θ_i = 2πi/n.
struct ConeProblem {
  int n = 0;
  Eigen::MatrixXd m;
  Eigen::VectorXd q;

  static ConeProblem build(const QuadCoeffs& coeffs, int n);

  double angle(int i) const { return kTwoPi * i / n; }
  double value(const Eigen::VectorXd& w) const { return w.dot(m * w) + q.dot(w); }
  /// J restricted to a support set with the given weights.
  double value(const std::vector<int>& support, const std::vector<double>& weights) const;
};

/// Weights of the vertex supported on {i, j, k}: mass 2π, zero first moments.
/// Empty when infeasible (negative weight) or ill-conditioned (cond > 1e8).
std::optional<std::vector<double>> vertex_weights(const ConeProblem& p, const std::vector<int>& support);

enum class Shape { segment, triangle, other };
std::string to_string(Shape s);

struct ConeSolution {
  std::vector<Atom> atoms;       // merged
  std::vector<Atom> raw_atoms;   // grid vertex before merging
  double value = 0.0;            // eval_J of h_opt
  double discrete_value = 0.0;   // wᵀMw + qᵀw at the grid vertex
  Shape classification = Shape::other;
  SupportFn h_opt = SupportFn::disc();
  int iterations = 0;
};

struct ConeOptions {
  int restarts = 20;
  std::uint64_t seed = 1;
};

/// Multistart vertex ascent on the discretized cone (n even, ≥ 64).
ConeSolution maximize_over_cone(const QuadCoeffs& coeffs, int n, const ConeOptions& opts = {});
ConeSolution maximize_over_cone(const ConeProblem& p, const QuadCoeffs& coeffs, const ConeOptions& opts = {});

/// Classification of a vertex after merging atoms closer than 2 grid steps.
ConeSolution classify_vertex(const ConeProblem& p, const QuadCoeffs& coeffs, const std::vector<int>& support,
                             const std::vector<double>& weights);

struct TriangleSearchResult {
  bool segment_wins = false;
  TriangleSpec triangle;            // best triangle found
  double triangle_value = 0.0;
  double segment_alpha = 0.0;       // best segment axis in [0, π)
  double segment_value = 0.0;
  double value = 0.0;               // max of the two
  SupportFn best() const;
};

/// Nelder–Mead over triangle angles (50 Halton starts) and a 1024-point plus
/// golden-section scan of the segment family.
TriangleSearchResult maximize_over_triangles(const QuadCoeffs& coeffs);

/// Nelder–Mead minimization of an arbitrary triangle objective from the same
/// starts; used for closest-triangle problems.
TriangleSpec minimize_over_triangles(const std::function<double(const TriangleSpec&)>& f, int starts = 50);

}  // namespace shapes
