#include "shapes/weingarten.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace shapes {

// --- measure ----------------------------------------------------------------

double CurvatureMeasure::mass() const {
  double m = 0.0;
  for (const auto& a : atoms) m += a.weight;
  if (has_density()) {
    const double dx = kTwoPi / static_cast<double>(density.size());
    m += dx * std::accumulate(density.begin(), density.end(), 0.0);
  }
  return m;
}

Eigen::Vector2d CurvatureMeasure::first_moment() const {
  Eigen::Vector2d m(0.0, 0.0);
  for (const auto& a : atoms) m += a.weight * Eigen::Vector2d(std::cos(a.angle), std::sin(a.angle));
  const auto n = density.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double t = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    m += (kTwoPi / static_cast<double>(n)) * density[i] * Eigen::Vector2d(std::cos(t), std::sin(t));
  }
  return m;
}

std::vector<double> CurvatureMeasure::support(double threshold) const {
  std::vector<double> out;
  for (const auto& a : atoms) {
    if (a.weight > threshold) out.push_back(a.angle);
  }
  const auto n = density.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (kTwoPi / static_cast<double>(n) * density[i] > threshold) {
      out.push_back(kTwoPi * static_cast<double>(i) / static_cast<double>(n));
    }
  }
  return out;
}

// --- kernel -------------------------------------------------------------------

namespace green {

double kernel(double t) {
  const double x = std::abs(wrap_signed(t));
  return (1.0 - x / kPi) * std::sin(x);
}

double kernel_derivative(double t) {
  const double s = wrap_signed(t);
  if (s == 0.0) return -1.0;
  const double x = std::abs(s);
  const double d = -std::sin(x) / kPi + (1.0 - x / kPi) * std::cos(x);
  return s > 0.0 ? d : -d;
}

double g4(double tau) {
  return kScale * (kernel(tau) + kernel(tau - 0.5 * kPi) + kernel(-tau) + kernel(-tau - 0.5 * kPi));
}

}  // namespace green

// --- triangles ----------------------------------------------------------------

std::array<double, 3> TriangleSpec::gaps() const {
  return {theta[1] - theta[0], theta[2] - theta[1], kTwoPi + theta[0] - theta[2]};
}

std::optional<std::string> TriangleSpec::violation() const {
  static const std::array<const char*, 3> names{
      "0 < theta2 - theta1 < pi", "0 < theta3 - theta2 < pi", "0 < 2pi + theta1 - theta3 < pi"};
  const auto g = gaps();
  for (std::size_t i = 0; i < 3; ++i) {
    if (!std::isfinite(g[i])) return std::string("non-finite angle");
    if (!(g[i] > 0.0 && g[i] < kPi)) return std::string("violates ") + names[i];
  }
  return std::nullopt;
}

double TriangleSpec::margin() const {
  double m = kPi;
  for (double g : gaps()) m = std::min({m, g, kPi - g});
  return m;
}

std::array<double, 3> TriangleSpec::lengths() const {
  const double s1 = std::sin(theta[2] - theta[1]);
  const double s2 = std::sin(theta[0] - theta[2]);
  const double s3 = std::sin(theta[1] - theta[0]);
  const double d = s1 + s2 + s3;
  return {kTwoPi * s1 / d, kTwoPi * s2 / d, kTwoPi * s3 / d};
}

TriangleSpec TriangleSpec::canonical() const {
  TriangleSpec c;
  for (std::size_t i = 0; i < 3; ++i) c.theta[i] = wrap_2pi(theta[i]);
  std::sort(c.theta.begin(), c.theta.end());
  return c;
}

void require_valid(const TriangleSpec& t) {
  if (auto v = t.violation()) throw std::invalid_argument("triangle: " + *v);
}

SupportFn triangle_support(const TriangleSpec& t) {
  require_valid(t);
  const TriangleSpec c = t.canonical();
  return SupportFn::triangle(TriangleForm{c.theta, c.lengths()});
}

SupportFn polygon_support(const std::vector<double>& normals, const std::vector<double>& lengths,
                          bool normalize) {
  std::vector<double> l = lengths;
  if (normalize) {
    const double total = std::accumulate(l.begin(), l.end(), 0.0);
    if (!(total > 0.0)) throw ShapeError("polygon: total length must be positive");
    for (double& x : l) x *= kTwoPi / total;
  }
  if (normals.size() == 2 && l.size() == 2 &&
      std::abs(circular_distance(normals[0], normals[1]) - kPi) < 1e-12 &&
      std::abs(l[0] - kPi) < 1e-12 && std::abs(l[1] - kPi) < 1e-12) {
    return SupportFn::segment(normals[0]);
  }
  return SupportFn::polygon(normals, std::move(l));
}

// --- solve ------------------------------------------------------------------

SupportFn solve(const CurvatureMeasure& r) {
  if (r.atoms.empty() && !r.has_density()) throw ShapeError("solve: empty measure");
  for (const auto& a : r.atoms) {
    if (!std::isfinite(a.angle) || !std::isfinite(a.weight)) throw ShapeError("solve: non-finite atom");
  }
  const Eigen::Vector2d moment = r.first_moment();
  const double tol = 1e-8 * std::max(1.0, std::abs(r.mass()));
  if (moment.norm() > tol) {
    throw ClosureError("solve: first moments do not vanish (|m| = " + std::to_string(moment.norm()) + ")");
  }

  if (!r.has_density()) {
    std::vector<double> normals;
    std::vector<double> lengths;
    for (const auto& a : r.atoms) {
      if (a.weight == 0.0) continue;
      normals.push_back(a.angle);
      lengths.push_back(a.weight);
    }
    return polygon_support(normals, lengths);
  }

  const int n = static_cast<int>(r.density.size());
  const AngleGrid grid(n);
  const double dx = grid.spacing();
  std::vector<double> table(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) table[static_cast<std::size_t>(k)] = green::kernel(grid.node(k));

  std::vector<double> h(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
      s += r.density[static_cast<std::size_t>(j)] * table[static_cast<std::size_t>((j - i + n) % n)];
    }
    // Trapezoid plus the endpoint correction for the kernel's kink at t = 0.
    s = dx * s + dx * dx * r.density[ui] / 6.0;
    double atoms = 0.0;
    for (const auto& a : r.atoms) atoms += a.weight * green::kernel(a.angle - grid.node(i));
    h[ui] = green::kScale * (s + atoms);
  }
  return SupportFn::grid(std::move(h));
}

SupportFn solve_trigonometric(double c0, const std::vector<FourierTerm>& terms) {
  std::vector<FourierTerm> out;
  for (const auto& t : terms) {
    if (t.k == 1) {
      if (t.a != 0.0 || t.b != 0.0) throw ClosureError("solve: density has a first harmonic");
      continue;
    }
    const double f = 1.0 / (1.0 - static_cast<double>(t.k) * t.k);
    out.push_back({t.k, f * t.a, f * t.b});
  }
  return SupportFn::fourier(c0, std::move(out));
}

// --- curvature ----------------------------------------------------------------

namespace {

std::vector<double> resample(const std::vector<double>& d, int n) {
  if (static_cast<int>(d.size()) == n) return d;
  const auto src = SupportFn::grid(d);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = src.value(kTwoPi * i / n);
  return out;
}

}  // namespace

CurvatureMeasure curvature_of(const SupportFn& h, int density_n) {
  CurvatureMeasure m;
  if (const auto* s = h.as<SegmentForm>()) {
    m.atoms = {{wrap_2pi(s->alpha), kPi}, {wrap_2pi(s->alpha + kPi), kPi}};
  } else if (const auto* p = h.as<PolygonForm>()) {
    for (std::size_t i = 0; i < p->normals.size(); ++i) m.atoms.push_back({p->normals[i], p->lengths[i]});
  } else if (const auto* t = h.as<TriangleForm>()) {
    for (std::size_t i = 0; i < 3; ++i) m.atoms.push_back({t->normals[i], t->lengths[i]});
  } else if (const auto* f = h.as<FourierForm>()) {
    const AngleGrid grid(density_n);
    m.density.resize(static_cast<std::size_t>(density_n));
    for (int i = 0; i < density_n; ++i) {
      const double th = grid.node(i);
      double v = f->c0;
      for (const auto& term : f->terms) {
        v += (1.0 - term.k * term.k) * (term.a * std::cos(term.k * th) + term.b * std::sin(term.k * th));
      }
      m.density[static_cast<std::size_t>(i)] = v;
    }
  } else if (const auto* g = h.as<GridForm>()) {
    const int n = static_cast<int>(g->samples.size());
    const double dx = kTwoPi / n;
    m.density.resize(g->samples.size());
    for (int i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const double up = g->samples[static_cast<std::size_t>((i + 1) % n)];
      const double dn = g->samples[static_cast<std::size_t>((i + n - 1) % n)];
      m.density[ui] = (up - 2.0 * g->samples[ui] + dn) / (dx * dx) + g->samples[ui];
    }
  } else if (const auto* mk = h.as<MinkowskiForm>()) {
    std::vector<CurvatureMeasure> parts;
    int n = 0;
    for (const auto& term : mk->terms) {
      parts.push_back(curvature_of(*term.shape, density_n));
      if (parts.back().has_density()) {
        const int pn = static_cast<int>(parts.back().density.size());
        n = (n == 0 || n == pn) ? pn : density_n;
      }
    }
    if (n > 0) m.density.assign(static_cast<std::size_t>(n), 0.0);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const double w = mk->terms[k].weight;
      for (const auto& a : parts[k].atoms) m.atoms.push_back({a.angle, w * a.weight});
      if (parts[k].has_density()) {
        const auto d = resample(parts[k].density, n);
        for (std::size_t i = 0; i < d.size(); ++i) m.density[i] += w * d[i];
      }
    }
  }
  return m;
}

}  // namespace shapes
