#include "shapes/quad_functional.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

namespace shapes {

double eval_J(const QuadCoeffs& q, const SupportFn& h) {
  const SupportFn* p = &h;
  const auto rule = integration_rule(std::span<const SupportFn* const>(&p, 1), coefficient_breaks(q),
                                     coefficient_sample_count(q));
  const bool use_a = !q.a.is_zero();
  const bool use_b = !q.b.is_zero();
  const bool use_c = !q.c.is_zero();
  const bool use_d = !q.d.is_zero();
  return rule.integrate([&](double t) {
    double s = 0.0;
    double v = 0.0;
    double dv = 0.0;
    if (use_a || use_c) v = h.value(t);
    if (use_b || use_d) dv = h.derivative(t);
    if (use_a) s += q.a.value(t) * v * v;
    if (use_b) s += q.b.value(t) * dv * dv;
    if (use_c) s += q.c.value(t) * v;
    if (use_d) s += q.d.value(t) * dv;
    return s;
  });
}

// --- discretized cone ---------------------------------------------------------

ConeProblem ConeProblem::build(const QuadCoeffs& coeffs, int n) {
  const AngleGrid grid(n);
  const int r = std::max(2, (2048 + n - 1) / n);
  const int nf = r * n;
  const double df = kTwoPi / nf;

  Eigen::VectorXd a(nf), b(nf), c(nf), d(nf);
  for (int l = 0; l < nf; ++l) {
    const double lo = (l - 0.5) * df;
    const double hi = (l + 0.5) * df;
    a(l) = std::max(0.0, coeffs.a.average(lo, hi));
    b(l) = std::max(0.0, coeffs.b.average(lo, hi));
    c(l) = coeffs.c.average(lo, hi);
    d(l) = coeffs.d.average(lo, hi);
  }

  // ψ_i(φ) = κ G₀(θ_i − φ) depends on (r·i − l) mod nf only.
  Eigen::VectorXd g(nf), dg(nf);
  for (int k = 0; k < nf; ++k) {
    g(k) = green::kScale * green::kernel(k * df);
    dg(k) = k == 0 ? 0.0 : -green::kScale * green::kernel_derivative(k * df);
  }
  Eigen::MatrixXd psi(nf, n), dpsi(nf, n);
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < nf; ++l) {
      const int k = ((r * i - l) % nf + nf) % nf;
      psi(l, i) = g(k);
      dpsi(l, i) = dg(k);
    }
  }

  ConeProblem p;
  p.n = n;
  p.m = Eigen::MatrixXd::Zero(n, n);
  const Eigen::MatrixXd wa = (df * a).cwiseSqrt().asDiagonal() * psi;
  const Eigen::MatrixXd wb = (df * b).cwiseSqrt().asDiagonal() * dpsi;
  p.m.selfadjointView<Eigen::Lower>().rankUpdate(wa.transpose());
  p.m.selfadjointView<Eigen::Lower>().rankUpdate(wb.transpose());
  p.m = p.m.selfadjointView<Eigen::Lower>();
  // ψ_i' = ±κ on the two halves of the cell around its own kink.
  for (int i = 0; i < n; ++i) p.m(i, i) += 0.25 * df * b(r * i);
  p.q = df * (psi.transpose() * c + dpsi.transpose() * d);
  return p;
}

double ConeProblem::value(const std::vector<int>& support, const std::vector<double>& weights) const {
  double v = 0.0;
  for (std::size_t x = 0; x < support.size(); ++x) {
    v += q(support[x]) * weights[x];
    for (std::size_t y = 0; y < support.size(); ++y) v += weights[x] * weights[y] * m(support[x], support[y]);
  }
  return v;
}

std::optional<std::vector<double>> vertex_weights(const ConeProblem& p, const std::vector<int>& support) {
  if (support.size() == 2) {
    if ((support[0] + p.n / 2) % p.n != support[1] && (support[1] + p.n / 2) % p.n != support[0]) {
      return std::nullopt;
    }
    return std::vector<double>{kPi, kPi};
  }
  if (support.size() != 3) return std::nullopt;
  Eigen::Matrix3d a;
  for (int k = 0; k < 3; ++k) {
    const double t = p.angle(support[static_cast<std::size_t>(k)]);
    a(0, k) = 1.0;
    a(1, k) = std::cos(t);
    a(2, k) = std::sin(t);
  }
  const double det = a.determinant();
  if (std::abs(det) < 1e-14) return std::nullopt;
  const Eigen::Matrix3d inv = a.inverse();
  const double cond = a.cwiseAbs().colwise().sum().maxCoeff() * inv.cwiseAbs().colwise().sum().maxCoeff();
  if (cond > 1e8) return std::nullopt;
  const Eigen::Vector3d w = inv * Eigen::Vector3d(kTwoPi, 0.0, 0.0);
  std::vector<double> out(3);
  for (int k = 0; k < 3; ++k) {
    if (w(k) < -1e-12) return std::nullopt;
    out[static_cast<std::size_t>(k)] = std::max(0.0, w(k));
  }
  return out;
}

std::string to_string(Shape s) {
  switch (s) {
    case Shape::segment:
      return "segment";
    case Shape::triangle:
      return "triangle";
    case Shape::other:
      return "other";
  }
  return "other";
}

ConeSolution classify_vertex(const ConeProblem& p, const QuadCoeffs& coeffs, const std::vector<int>& support,
                             const std::vector<double>& weights) {
  ConeSolution s;
  s.discrete_value = p.value(support, weights);
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (weights[k] > 1e-12) s.raw_atoms.push_back({p.angle(support[k]), weights[k]});
  }
  std::sort(s.raw_atoms.begin(), s.raw_atoms.end(), [](const Atom& x, const Atom& y) { return x.angle < y.angle; });

  // Merge circularly consecutive atoms within 2 grid steps.
  const double reach = 2.0 * kTwoPi / p.n + 1e-12;
  std::vector<std::vector<Atom>> clusters;
  for (const auto& atom : s.raw_atoms) {
    if (!clusters.empty() && atom.angle - clusters.back().back().angle <= reach) {
      clusters.back().push_back(atom);
    } else {
      clusters.push_back({atom});
    }
  }
  if (clusters.size() > 1 &&
      clusters.front().front().angle + kTwoPi - clusters.back().back().angle <= reach) {
    for (auto& atom : clusters.front()) clusters.back().push_back({atom.angle + kTwoPi, atom.weight});
    clusters.erase(clusters.begin());
  }
  for (const auto& cl : clusters) {
    double mass = 0.0;
    double moment = 0.0;
    for (const auto& atom : cl) {
      mass += atom.weight;
      moment += atom.weight * (atom.angle - cl.front().angle);
    }
    s.atoms.push_back({wrap_2pi(cl.front().angle + moment / mass), mass});
  }

  const std::vector<double> raw_normals = [&] {
    std::vector<double> v;
    for (const auto& atom : s.raw_atoms) v.push_back(atom.angle);
    return v;
  }();
  const std::vector<double> raw_weights = [&] {
    std::vector<double> v;
    for (const auto& atom : s.raw_atoms) v.push_back(atom.weight);
    return v;
  }();

  if (s.atoms.size() == 2) {
    const auto& x = s.atoms[0];
    const auto& y = s.atoms[1];
    const bool antipodal = circular_distance(x.angle, y.angle) >= kPi - kTwoPi / p.n - 1e-12;
    if (antipodal && std::abs(x.weight - kPi) <= 1e-6 && std::abs(y.weight - kPi) <= 1e-6) {
      s.classification = Shape::segment;
      const double off = wrap_signed(y.angle - kPi - x.angle);
      s.h_opt = SupportFn::segment(x.angle + 0.5 * off);
    }
  } else if (s.atoms.size() == 3) {
    const TriangleSpec t = TriangleSpec{{s.atoms[0].angle, s.atoms[1].angle, s.atoms[2].angle}}.canonical();
    if (!t.violation()) {
      s.classification = Shape::triangle;
      s.h_opt = triangle_support(t);
    }
  }
  if (s.classification == Shape::other) s.h_opt = polygon_support(raw_normals, raw_weights);
  s.value = eval_J(coeffs, s.h_opt);
  return s;
}

namespace {

struct Vertex {
  std::vector<int> support;
  std::vector<double> weights;
  double value = -std::numeric_limits<double>::infinity();
};

class Ascent {
 public:
  Ascent(const ConeProblem& p, std::mt19937_64& rng) : p_(p), rng_(rng), pick_(0, p.n - 1) {}

  Vertex start() {
    for (int attempt = 0; attempt < 100; ++attempt) {
      std::vector<int> s{pick_(rng_), pick_(rng_), pick_(rng_)};
      if (s[0] == s[1] || s[1] == s[2] || s[0] == s[2]) continue;
      if (auto v = make(s)) return *v;
    }
    const int i = pick_(rng_);
    return *make({i, (i + p_.n / 2) % p_.n});
  }

  // Best-improvement walk; returns the local vertex and the step count.
  std::pair<Vertex, int> climb(Vertex v) {
    int steps = 0;
    while (steps < 100000) {
      Vertex best = v;
      for_each_neighbour(v, [&](const std::vector<int>& s) {
        if (auto c = make(s); c && c->value > best.value) best = *c;
      });
      if (best.value <= v.value + 1e-12) break;
      v = std::move(best);
      ++steps;
    }
    return {v, steps};
  }

 private:
  std::optional<Vertex> make(const std::vector<int>& s) const {
    auto w = vertex_weights(p_, s);
    if (!w) return std::nullopt;
    Vertex v{s, *w, p_.value(s, *w)};
    return v;
  }

  int wrap(int i) const { return ((i % p_.n) + p_.n) % p_.n; }

  template <class F>
  void for_each_neighbour(const Vertex& v, F&& visit) {
    const int half = p_.n / 2;
    const int w = std::max(1, p_.n / 8);
    std::vector<int> random(8);
    for (int& r : random) r = pick_(rng_);
    const auto& s = v.support;
    auto contains = [&](int m) { return std::find(s.begin(), s.end(), m) != s.end(); };

    if (s.size() == 3) {
      for (std::size_t pos = 0; pos < 3; ++pos) {
        auto replace = [&](int m) {
          if (contains(m)) return;
          auto t = s;
          t[pos] = m;
          visit(t);
        };
        for (int off = -w; off <= w; ++off) {
          if (off != 0) replace(wrap(s[pos] + off));
        }
        for (int m : random) replace(m);
        visit({s[pos], wrap(s[pos] + half)});
      }
      return;
    }
    // Segment vertex {i, i + n/2}.
    for (std::size_t pos = 0; pos < 2; ++pos) {
      const int i = s[pos];
      const int anti = s[1 - pos];
      for (int off = -w; off <= w; ++off) {
        if (off != 0) visit({wrap(i + off), wrap(i + off + half)});
      }
      for (int x = 1; x <= w; ++x) {
        for (int y = 1; y <= w; ++y) visit({i, wrap(anti - x), wrap(anti + y)});
      }
    }
    for (int m : random) {
      if (!contains(m) && !contains(wrap(m + half))) visit({m, wrap(m + half)});
    }
  }

  const ConeProblem& p_;
  std::mt19937_64& rng_;
  std::uniform_int_distribution<int> pick_;
};

}  // namespace

ConeSolution maximize_over_cone(const ConeProblem& p, const QuadCoeffs& coeffs, const ConeOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  Ascent ascent(p, rng);
  Vertex best;
  int iterations = 0;
  for (int r = 0; r < std::max(1, opts.restarts); ++r) {
    auto [v, steps] = ascent.climb(ascent.start());
    iterations += steps;
    const bool better = v.value > best.value + 1e-12 ||
                        (std::abs(v.value - best.value) <= 1e-12 && !best.support.empty() &&
                         *std::min_element(v.support.begin(), v.support.end()) <
                             *std::min_element(best.support.begin(), best.support.end()));
    if (better) best = std::move(v);
  }
  ConeSolution s = classify_vertex(p, coeffs, best.support, best.weights);
  s.iterations = iterations;
  return s;
}

ConeSolution maximize_over_cone(const QuadCoeffs& coeffs, int n, const ConeOptions& opts) {
  if (n < 64 || n % 2 != 0) throw std::invalid_argument("maximize_over_cone: n must be even and >= 64");
  validate(coeffs);
  const ConeProblem p = ConeProblem::build(coeffs, n);
  return maximize_over_cone(p, coeffs, opts);
}

}  // namespace shapes
