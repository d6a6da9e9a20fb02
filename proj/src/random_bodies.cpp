#include "shapes/random_bodies.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "shapes/weingarten.hpp"

namespace shapes {
namespace {

SupportFn random_atoms(std::mt19937_64& rng, int k) {
  if (k < 2) throw std::invalid_argument("random_class_A: atoms style needs k >= 2");
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  if (k == 2) return SupportFn::segment(angle(rng));

  std::uniform_real_distribution<double> weight(0.2, 1.0);
  const auto n = static_cast<Eigen::Index>(k);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Eigen::VectorXd th(n);
    Eigen::VectorXd w(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      th(i) = angle(rng);
      w(i) = weight(rng);
    }
    Eigen::MatrixXd a(2, n);
    a.row(0) = th.array().cos().matrix().transpose();
    a.row(1) = th.array().sin().matrix().transpose();
    const Eigen::Matrix2d gram = a * a.transpose();
    if (std::abs(gram.determinant()) < 1e-10) continue;
    w -= a.transpose() * gram.ldlt().solve(a * w);
    if (w.minCoeff() <= 1e-3 * w.maxCoeff()) continue;
    w *= kTwoPi / w.sum();
    std::vector<double> normals(th.data(), th.data() + n);
    std::vector<double> lengths(w.data(), w.data() + n);
    return polygon_support(normals, lengths);
  }
  throw RandomBodyError("random_class_A: 100 draws rejected");
}

SupportFn random_smooth(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> order(2, 6);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const int top = order(rng);
  std::vector<FourierTerm> terms;
  double total = 0.0;
  for (int k = 2; k <= top; ++k) {
    FourierTerm t{k, unit(rng), unit(rng)};
    total += std::abs(t.a) + std::abs(t.b);
    terms.push_back(t);
  }
  // Keeps the density ≥ 1 − 0.9·budget > 0.
  std::uniform_real_distribution<double> budget(0.05, 0.9);
  const double scale = budget(rng) / total;
  for (auto& t : terms) {
    t.a *= scale;
    t.b *= scale;
  }
  return solve_trigonometric(1.0, terms);
}

}  // namespace

SupportFn random_class_A(std::uint64_t seed, BodyStyle style, int k) {
  std::mt19937_64 rng(seed);
  switch (style) {
    case BodyStyle::atoms:
      return random_atoms(rng, k);
    case BodyStyle::smooth:
      return random_smooth(rng);
    case BodyStyle::mixed: {
      std::uniform_real_distribution<double> mix(0.2, 0.8);
      const double t = mix(rng);
      auto poly = random_atoms(rng, k);
      auto smooth = random_smooth(rng);
      return SupportFn::minkowski({{t, poly}, {1.0 - t, smooth}});
    }
  }
  throw std::invalid_argument("random_class_A: unknown style");
}

}  // namespace shapes
