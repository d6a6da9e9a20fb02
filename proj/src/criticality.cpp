#include "shapes/criticality.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "shapes/quad_functional.hpp"

namespace shapes {
namespace {

double sq(double x) { return x * x; }

// ∫_lo^hi f over one arc, split at the kinks of C.
template <class F>
double arc_integral(const SupportFn& c, double lo, double hi, F&& f) {
  std::vector<double> inner;
  for (double k : c.kinks()) {
    const double x = lo + wrap_2pi(k - lo);
    if (x > lo && x < hi) inner.push_back(x);
  }
  const int n = c.sample_count();
  for (int i = 0; i < n; ++i) {
    const double x = lo + wrap_2pi(kTwoPi * i / n - lo);
    if (x > lo && x < hi) inner.push_back(x);
  }
  const double panel = n > 0 ? std::min(kDefaultPanel, kTwoPi / n) : kDefaultPanel;
  return gauss_panels(lo, hi, inner, panel).integrate(f);
}

}  // namespace

std::array<std::array<double, 3>, 3> length_partials(const TriangleSpec& t) {
  const auto& th = t.theta;
  const std::array<double, 3> s{std::sin(th[2] - th[1]), std::sin(th[0] - th[2]), std::sin(th[1] - th[0])};
  const double c1 = std::cos(th[2] - th[1]);
  const double c2 = std::cos(th[0] - th[2]);
  const double c3 = std::cos(th[1] - th[0]);
  const std::array<std::array<double, 3>, 3> ds{{{0.0, -c1, c1}, {c2, 0.0, -c2}, {-c3, c3, 0.0}}};
  const double d = s[0] + s[1] + s[2];
  std::array<double, 3> dd{};
  for (std::size_t j = 0; j < 3; ++j) dd[j] = ds[0][j] + ds[1][j] + ds[2][j];
  std::array<std::array<double, 3>, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) out[i][j] = kTwoPi * (ds[i][j] * d - s[i] * dd[j]) / (d * d);
  }
  return out;
}

std::array<double, 3> a1_partials_closed_form(const TriangleSpec& t) {
  const auto& th = t.theta;
  const double d12 = 0.5 * (th[1] - th[0]);
  const double d31 = 0.5 * (th[0] - th[2]);
  const double p2 = 0.5 * kPi / std::tan(d31) / sq(std::sin(d12));
  const double p3 = -0.5 * kPi / std::tan(d12) / sq(std::sin(d31));
  const double p1 = -0.25 * kPi * (std::sin(th[0] - th[1]) + std::sin(th[0] - th[2])) /
                    (sq(std::sin(d12)) * sq(std::sin(d31)));
  return {p2, p3, p1};
}

double triangle_l2_sq(const TriangleSpec& t, const SupportFn& c) {
  const double d = l2_distance(triangle_support(t), c);
  return d * d;
}

CriticalityReport triangle_criticality(const TriangleSpec& spec, const SupportFn& c) {
  require_valid(spec);
  const TriangleSpec t = spec.canonical();
  const auto& th = t.theta;
  const SupportFn ht = triangle_support(t);
  const auto a = t.lengths();
  const auto diff = [&](double x) { return ht.value(x) - c.value(x); };
  const auto sine = [&](double lo, double hi, double shift) {
    return arc_integral(c, lo, hi, [&](double x) { return diff(x) * std::sin(x - shift); });
  };
  const auto cosine = [&](double lo, double hi, double shift) {
    return arc_integral(c, lo, hi, [&](double x) { return diff(x) * std::cos(x - shift); });
  };

  CriticalityReport r;
  r.i1 = sine(th[0], th[1], th[0]);
  r.i2 = sine(th[0], th[1], th[1]);
  r.j1 = sine(th[1], th[2], th[1]);
  r.j2 = sine(th[1], th[2], th[2]);
  r.k1 = sine(th[2], th[0] + kTwoPi, th[2]);
  r.k2 = sine(th[2], th[0] + kTwoPi, th[0]);
  {
    std::vector<double> breaks = c.kinks();
    breaks.insert(breaks.end(), th.begin(), th.end());
    const int n = c.sample_count();
    if (n > 0) {
      r.i = periodic_trapezoid(n * std::max(1, (kDefaultTrapezoidNodes + n - 1) / n))
                .integrate([&](double x) { return diff(x) * ht.value(x); });
    } else {
      r.i = periodic_gauss(breaks, kDefaultPanel).integrate([&](double x) { return diff(x) * ht.value(x); });
    }
  }
  r.partials = length_partials(t);
  const auto& p = r.partials;
  const double c1 = cosine(th[0], th[1], th[0]);
  const double c3 = cosine(th[1], th[2], th[2]);
  r.stationarity[0] = p[0][0] * r.i1 - a[0] * c1 - p[2][0] * r.j2;
  r.stationarity[1] = p[0][1] * r.i1 - p[2][1] * r.j2;
  r.stationarity[2] = p[0][2] * r.i1 + a[2] * c3 - p[2][2] * r.j2;

  const auto g = t.gaps();
  const double s1 = 2.0 * sq(std::sin(0.5 * g[0]));
  const double s2 = 2.0 * sq(std::sin(0.5 * g[1]));
  const double s3 = 2.0 * sq(std::sin(0.5 * g[2]));
  const std::array<double, 6> stated{-r.i1 / s1, r.j2 / s2, -r.j1 / s2, r.k2 / s3, -r.k1 / s3, r.i2 / s1};
  for (std::size_t k = 0; k < 6; ++k) {
    r.relation_residuals[k] = r.i - stated[k];
    r.corrected_relation_residuals[k] = r.i + kTwoPi * stated[k];
  }
  r.middle_condition = r.i1 / sq(std::sin(0.5 * g[0])) + r.j2 / sq(std::sin(0.5 * g[1]));
  r.product_identity = r.i - (a[0] * r.i1 - a[2] * r.j2);
  r.equilateral_identity = r.i - kTwoPi / 9.0 * (r.i1 - r.i2 + r.j1 - r.j2 + r.k1 - r.k2);

  constexpr double step = 1e-5;
  for (std::size_t j = 0; j < 3; ++j) {
    TriangleSpec up = t;
    TriangleSpec dn = t;
    up.theta[j] += step;
    dn.theta[j] -= step;
    r.fd_gradient[j] = (triangle_l2_sq(up, c) - triangle_l2_sq(dn, c)) / (2.0 * step);
  }
  return r;
}

ClosureResiduals closure_identities(const TriangleSpec& spec) {
  const TriangleSpec& t = spec;
  const auto a = t.lengths();
  ClosureResiduals r;
  for (std::size_t k = 0; k < 3; ++k) {
    r.cos_sum += a[k] * std::cos(t.theta[k]);
    r.sin_sum += a[k] * std::sin(t.theta[k]);
  }
  const auto& th = t.theta;
  const double sum = std::sin(th[2] - th[1]) + std::sin(th[0] - th[2]) + std::sin(th[1] - th[0]);
  const auto g = t.gaps();
  const double prod = 4.0 * std::sin(0.5 * g[1]) * std::sin(0.5 * g[0]) * std::sin(0.5 * g[2]);
  r.denominator = sum - prod;
  return r;
}

TriangleSpec closest_triangle(const SupportFn& c) {
  const auto f = [&](const TriangleSpec& t) { return triangle_l2_sq(t, c); };
  TriangleSpec t = minimize_over_triangles(f);

  // Newton polish on central differences.
  const double h = 1e-4;
  for (int iter = 0; iter < 8; ++iter) {
    Eigen::Vector3d grad;
    Eigen::Matrix3d hess;
    const double f0 = f(t);
    for (int i = 0; i < 3; ++i) {
      TriangleSpec up = t, dn = t;
      up.theta[static_cast<std::size_t>(i)] += h;
      dn.theta[static_cast<std::size_t>(i)] -= h;
      const double fu = f(up);
      const double fd = f(dn);
      grad(i) = (fu - fd) / (2.0 * h);
      hess(i, i) = (fu - 2.0 * f0 + fd) / (h * h);
    }
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        auto shifted = [&](double si, double sj) {
          TriangleSpec s = t;
          s.theta[static_cast<std::size_t>(i)] += si;
          s.theta[static_cast<std::size_t>(j)] += sj;
          return f(s);
        };
        hess(i, j) = hess(j, i) = (shifted(h, h) - shifted(h, -h) - shifted(-h, h) + shifted(-h, -h)) / (4.0 * h * h);
      }
    }
    // Stop on an indefinite Hessian.
    Eigen::LDLT<Eigen::Matrix3d> ldlt(hess);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) break;
    const Eigen::Vector3d dx = ldlt.solve(grad);
    TriangleSpec next = t;
    for (int i = 0; i < 3; ++i) next.theta[static_cast<std::size_t>(i)] -= dx(i);
    if (next.violation() || f(next) > f0) break;
    t = next;
    if (dx.norm() < 1e-12) break;
  }
  return t.canonical();
}

}  // namespace shapes
