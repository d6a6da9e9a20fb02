#include "shapes/support_fn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "shapes/optimize.hpp"
#include "shapes/weingarten.hpp"

namespace shapes {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double grid_value(const GridForm& g, double theta) {
  const int n = static_cast<int>(g.samples.size());
  const double x = wrap_2pi(theta) / (kTwoPi / n);
  int i = static_cast<int>(std::floor(x));
  double t = x - i;
  if (i >= n) {
    i = n - 1;
    t = 1.0;
  }
  const auto ui = static_cast<std::size_t>(i);
  const auto uj = static_cast<std::size_t>((i + 1) % n);
  return (1.0 - t) * g.samples[ui] + t * g.samples[uj];
}

double grid_nodal_derivative(const GridForm& g, int i) {
  const int n = static_cast<int>(g.samples.size());
  const double dx = kTwoPi / n;
  const auto up = static_cast<std::size_t>((i + 1) % n);
  const auto dn = static_cast<std::size_t>((i + n - 1) % n);
  return (g.samples[up] - g.samples[dn]) / (2.0 * dx);
}

double grid_derivative(const GridForm& g, double theta) {
  const int n = static_cast<int>(g.samples.size());
  const double x = wrap_2pi(theta) / (kTwoPi / n);
  int i = static_cast<int>(std::floor(x));
  double t = x - i;
  if (i >= n) {
    i = n - 1;
    t = 1.0;
  }
  return (1.0 - t) * grid_nodal_derivative(g, i) + t * grid_nodal_derivative(g, (i + 1) % n);
}

// Piecewise closed form for a triangle with normals sorted in [0, 2π).
double triangle_value(const TriangleForm& t, double theta) {
  const double x = wrap_2pi(theta);
  const auto& n = t.normals;
  const auto& a = t.lengths;
  double phi = 0.0;
  for (std::size_t k = 0; k < 3; ++k) phi += a[k] * n[k] * std::sin(x - n[k]);
  phi /= kTwoPi;
  if (x >= n[0] && x < n[1]) return phi + a[0] * std::sin(x - n[0]);
  if (x >= n[1] && x < n[2]) return phi - a[2] * std::sin(x - n[2]);
  return phi;
}

double triangle_derivative(const TriangleForm& t, double theta) {
  const double x = wrap_2pi(theta);
  const auto& n = t.normals;
  const auto& a = t.lengths;
  double dphi = 0.0;
  for (std::size_t k = 0; k < 3; ++k) dphi += a[k] * n[k] * std::cos(x - n[k]);
  dphi /= kTwoPi;
  if (x >= n[0] && x < n[1]) return dphi + a[0] * std::cos(x - n[0]);
  if (x >= n[1] && x < n[2]) return dphi - a[2] * std::cos(x - n[2]);
  return dphi;
}

double fourier_value(const FourierForm& f, double theta) {
  double v = f.c0;
  for (const auto& t : f.terms) v += t.a * std::cos(t.k * theta) + t.b * std::sin(t.k * theta);
  return v;
}

double fourier_derivative(const FourierForm& f, double theta) {
  double v = 0.0;
  for (const auto& t : f.terms) {
    v += t.k * (-t.a * std::sin(t.k * theta) + t.b * std::cos(t.k * theta));
  }
  return v;
}

// Fourier curvature c0 + Σ (1 − k²)(a cos kθ + b sin kθ).
double fourier_curvature(const FourierForm& f, double theta) {
  double v = f.c0;
  for (const auto& t : f.terms) {
    v += (1.0 - t.k * t.k) * (t.a * std::cos(t.k * theta) + t.b * std::sin(t.k * theta));
  }
  return v;
}

void sort_by_angle(std::vector<double>& angles, std::vector<double>& weights) {
  std::vector<std::size_t> idx(angles.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return angles[a] < angles[b]; });
  std::vector<double> a2, w2;
  for (auto i : idx) {
    a2.push_back(angles[i]);
    w2.push_back(weights[i]);
  }
  angles = std::move(a2);
  weights = std::move(w2);
}

struct Candidate {
  double theta;
  double value;
};

// Maximizes f over the circle from precomputed samples at θ_i = 2πi/n: keep
// the best local maxima and refine each by golden section within one cell on
// either side. Exact candidate angles (kinks) are always included.
std::vector<Candidate> refined_maxima(const std::function<double(double)>& f,
                                      const std::vector<double>& vals,
                                      const std::vector<double>& exact, int refine_count) {
  const int scan_n = static_cast<int>(vals.size());
  const double dx = kTwoPi / scan_n;
  std::vector<Candidate> cands;
  for (int i = 0; i < scan_n; ++i) {
    const double v = vals[static_cast<std::size_t>(i)];
    const double l = vals[static_cast<std::size_t>((i + scan_n - 1) % scan_n)];
    const double r = vals[static_cast<std::size_t>((i + 1) % scan_n)];
    if (v >= l && v >= r) cands.push_back({i * dx, v});
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& a, const Candidate& b) { return a.value > b.value; });
  if (static_cast<int>(cands.size()) > refine_count) cands.resize(static_cast<std::size_t>(refine_count));

  std::vector<Candidate> finals = cands;
  for (const auto& c : cands) {
    const auto opt = golden_section_max(f, c.theta - dx, c.theta + dx, 1e-10);
    if (opt.value > c.value + 1e-15) finals.push_back({wrap_2pi(opt.x), opt.value});
  }
  for (double k : exact) finals.push_back({wrap_2pi(k), f(k)});
  return finals;
}

Candidate best_of(const std::vector<Candidate>& finals) {
  Candidate best{0.0, -std::numeric_limits<double>::infinity()};
  for (const auto& c : finals) best = c.value > best.value ? c : best;
  // Ties (within 1e-12) go to the smallest angle.
  for (const auto& c : finals) {
    if (c.value >= best.value - 1e-12 && c.theta < best.theta) best.theta = c.theta;
  }
  return best;
}

Candidate circle_max(const std::function<double(double)>& f, int scan_n,
                     const std::vector<double>& exact, int refine_count) {
  std::vector<double> vals(static_cast<std::size_t>(scan_n));
  for (int i = 0; i < scan_n; ++i) vals[static_cast<std::size_t>(i)] = f(kTwoPi * i / scan_n);
  return best_of(refined_maxima(f, vals, exact, refine_count));
}

int scan_size(const SupportFn& h) { return std::max(2048, 4 * h.sample_count()); }

// Sharpens a smooth extremum by bisection on sign·h', which is positive to the
// left of a maximum of sign·h. Leaves θ alone near kinks.
double polish_extremum(const SupportFn& h, double theta, double sign, const std::vector<double>& kinks) {
  constexpr double half = 2e-6;
  for (double k : kinks) {
    if (circular_distance(k, theta) <= 2.0 * half) return theta;
  }
  double lo = theta - half;
  double hi = theta + half;
  if (!(sign * h.derivative(lo) > 0.0 && sign * h.derivative(hi) < 0.0)) return theta;
  for (int i = 0; i < 60 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (sign * h.derivative(mid) > 0.0 ? lo : hi) = mid;
  }
  const double x = wrap_2pi(0.5 * (lo + hi));
  return sign * h.value(x) >= sign * h.value(theta) - 1e-15 ? x : theta;
}

}  // namespace

// --- construction -----------------------------------------------------------

SupportFn SupportFn::grid(std::vector<double> samples) {
  if (samples.size() < 8 || samples.size() % 2 != 0) {
    throw ShapeError("grid: sample count must be even and at least 8");
  }
  for (double s : samples) {
    if (!std::isfinite(s)) throw ShapeError("grid: non-finite sample");
  }
  return SupportFn(GridForm{std::move(samples)});
}

SupportFn SupportFn::segment(double alpha) {
  if (!std::isfinite(alpha)) throw ShapeError("segment: non-finite alpha");
  return SupportFn(SegmentForm{wrap_pi(alpha)});
}

SupportFn SupportFn::polygon(std::vector<double> normals, std::vector<double> lengths) {
  if (normals.size() != lengths.size()) throw ShapeError("polygon: normals and lengths differ in size");
  if (normals.size() < 2) throw ShapeError("polygon: need at least two sides");
  double cx = 0.0;
  double cy = 0.0;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (!std::isfinite(normals[i]) || !std::isfinite(lengths[i])) {
      throw ShapeError("polygon: non-finite entry");
    }
    if (!(lengths[i] > 0.0)) throw ShapeError("polygon: side lengths must be positive");
    normals[i] = wrap_2pi(normals[i]);
    cx += lengths[i] * std::cos(normals[i]);
    cy += lengths[i] * std::sin(normals[i]);
  }
  if (std::hypot(cx, cy) > 1e-8) {
    throw ShapeError("polygon: sides do not close (|sum a_j e^{i theta_j}| = " +
                     std::to_string(std::hypot(cx, cy)) + ")");
  }
  sort_by_angle(normals, lengths);
  return SupportFn(PolygonForm{std::move(normals), std::move(lengths)});
}

SupportFn SupportFn::triangle(const TriangleForm& form) { return SupportFn(form); }

SupportFn SupportFn::fourier(double c0, std::vector<FourierTerm> terms) {
  if (!std::isfinite(c0)) throw ShapeError("fourier: non-finite c0");
  for (const auto& t : terms) {
    if (t.k < 1) throw ShapeError("fourier: harmonic index must be >= 1");
    if (!std::isfinite(t.a) || !std::isfinite(t.b)) throw ShapeError("fourier: non-finite coefficient");
  }
  return SupportFn(FourierForm{c0, std::move(terms)});
}

SupportFn SupportFn::minkowski(const std::vector<std::pair<double, SupportFn>>& terms) {
  if (terms.empty()) throw ShapeError("minkowski: no terms");
  MinkowskiForm m;
  for (const auto& [w, s] : terms) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw ShapeError("minkowski: weights must be nonnegative");
    m.terms.push_back({w, std::make_shared<const SupportFn>(s)});
  }
  return SupportFn(std::move(m));
}

// --- evaluation ---------------------------------------------------------------

double SupportFn::value(double theta) const {
  return std::visit(
      Overloaded{
          [&](const GridForm& g) { return grid_value(g, theta); },
          [&](const SegmentForm& s) { return 0.5 * kPi * std::sin(wrap_pi(theta - s.alpha)); },
          [&](const PolygonForm& p) {
            double v = 0.0;
            for (std::size_t j = 0; j < p.normals.size(); ++j) {
              v += p.lengths[j] * green::kernel(p.normals[j] - theta);
            }
            return green::kScale * v;
          },
          [&](const TriangleForm& t) { return triangle_value(t, theta); },
          [&](const FourierForm& f) { return fourier_value(f, theta); },
          [&](const MinkowskiForm& m) {
            double v = 0.0;
            for (const auto& t : m.terms) v += t.weight * t.shape->value(theta);
            return v;
          },
      },
      repr_);
}

double SupportFn::derivative(double theta) const {
  return std::visit(
      Overloaded{
          [&](const GridForm& g) { return grid_derivative(g, theta); },
          [&](const SegmentForm& s) { return 0.5 * kPi * std::cos(wrap_pi(theta - s.alpha)); },
          [&](const PolygonForm& p) {
            double v = 0.0;
            for (std::size_t j = 0; j < p.normals.size(); ++j) {
              v -= p.lengths[j] * green::kernel_derivative(p.normals[j] - theta);
            }
            return green::kScale * v;
          },
          [&](const TriangleForm& t) { return triangle_derivative(t, theta); },
          [&](const FourierForm& f) { return fourier_derivative(f, theta); },
          [&](const MinkowskiForm& m) {
            double v = 0.0;
            for (const auto& t : m.terms) v += t.weight * t.shape->derivative(theta);
            return v;
          },
      },
      repr_);
}

std::vector<double> SupportFn::kinks() const {
  return std::visit(
      Overloaded{
          [](const GridForm&) { return std::vector<double>{}; },
          [](const SegmentForm& s) { return std::vector<double>{s.alpha, s.alpha + kPi}; },
          [](const PolygonForm& p) { return p.normals; },
          [](const TriangleForm& t) { return std::vector<double>(t.normals.begin(), t.normals.end()); },
          [](const FourierForm&) { return std::vector<double>{}; },
          [](const MinkowskiForm& m) {
            std::vector<double> out;
            for (const auto& t : m.terms) {
              if (t.weight == 0.0) continue;
              auto k = t.shape->kinks();
              out.insert(out.end(), k.begin(), k.end());
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
          },
      },
      repr_);
}

bool SupportFn::is_sampled() const { return sample_count() > 0; }

int SupportFn::sample_count() const {
  if (const auto* g = as<GridForm>()) return static_cast<int>(g->samples.size());
  if (const auto* m = as<MinkowskiForm>()) {
    int n = 0;
    for (const auto& t : m->terms) n = std::max(n, t.shape->sample_count());
    return n;
  }
  return 0;
}

std::string SupportFn::kind() const {
  return std::visit(Overloaded{
                        [](const GridForm&) { return std::string("grid"); },
                        [](const SegmentForm&) { return std::string("segment"); },
                        [](const PolygonForm&) { return std::string("polygon"); },
                        [](const TriangleForm&) { return std::string("triangle"); },
                        [](const FourierForm&) { return std::string("fourier"); },
                        [](const MinkowskiForm&) { return std::string("minkowski"); },
                    },
                    repr_);
}

// --- quadrature ---------------------------------------------------------------

QuadratureRule integration_rule(std::span<const SupportFn* const> shapes,
                                const std::vector<double>& extra_breaks, int extra_sample_count) {
  int n = extra_sample_count;
  std::vector<double> breaks = extra_breaks;
  for (const auto* s : shapes) {
    n = std::max(n, s->sample_count());
    auto k = s->kinks();
    breaks.insert(breaks.end(), k.begin(), k.end());
  }
  if (n > 0) {
    const int mult = (kDefaultTrapezoidNodes + n - 1) / n;
    return periodic_trapezoid(n * mult);
  }
  if (breaks.empty()) return periodic_trapezoid(kDefaultTrapezoidNodes);
  return periodic_gauss(breaks, kDefaultPanel);
}

namespace {
QuadratureRule rule_for(const SupportFn& h) {
  const SupportFn* p = &h;
  return integration_rule(std::span<const SupportFn* const>(&p, 1));
}
}  // namespace

double integral_h_sq(const SupportFn& h) {
  if (const auto* f = h.as<FourierForm>()) {
    double s = kTwoPi * f->c0 * f->c0;
    for (const auto& t : f->terms) s += kPi * (t.a * t.a + t.b * t.b);
    return s;
  }
  return rule_for(h).integrate([&](double t) {
    const double v = h.value(t);
    return v * v;
  });
}

double integral_dh_sq(const SupportFn& h) {
  if (const auto* f = h.as<FourierForm>()) {
    double s = 0.0;
    for (const auto& t : f->terms) s += kPi * t.k * t.k * (t.a * t.a + t.b * t.b);
    return s;
  }
  return rule_for(h).integrate([&](double t) {
    const double v = h.derivative(t);
    return v * v;
  });
}

// --- support_core operations -------------------------------------------------

double evaluate(const SupportFn& h, double theta) { return h.value(theta); }

double perimeter(const SupportFn& h) {
  return std::visit(
      Overloaded{
          [](const GridForm& g) {
            return std::accumulate(g.samples.begin(), g.samples.end(), 0.0) * kTwoPi /
                   static_cast<double>(g.samples.size());
          },
          [](const SegmentForm&) { return kTwoPi; },
          [](const PolygonForm& p) { return std::accumulate(p.lengths.begin(), p.lengths.end(), 0.0); },
          [&](const TriangleForm&) { return rule_for(h).integrate([&](double t) { return h.value(t); }); },
          [](const FourierForm& f) { return kTwoPi * f.c0; },
          [](const MinkowskiForm& m) {
            double p = 0.0;
            for (const auto& t : m.terms) p += t.weight * perimeter(*t.shape);
            return p;
          },
      },
      h.repr());
}

Eigen::Vector2d steiner(const SupportFn& h) {
  if (const auto* f = h.as<FourierForm>()) {
    for (const auto& t : f->terms) {
      if (t.k == 1) return {t.a, t.b};
    }
    return {0.0, 0.0};
  }
  if (const auto* m = h.as<MinkowskiForm>()) {
    Eigen::Vector2d s(0.0, 0.0);
    for (const auto& t : m->terms) s += t.weight * steiner(*t.shape);
    return s;
  }
  const auto rule = rule_for(h);
  const double cx = rule.integrate([&](double t) { return h.value(t) * std::cos(t); });
  const double cy = rule.integrate([&](double t) { return h.value(t) * std::sin(t); });
  return {cx / kPi, cy / kPi};
}

SupportFn normalize_to_class_A(const SupportFn& h) {
  const double p = perimeter(h);
  if (!(p > 1e-12)) throw ShapeError("normalize: perimeter is zero (degenerate point)");
  const double scale = kTwoPi / p;
  const Eigen::Vector2d s = steiner(h);

  if (const auto* f = h.as<FourierForm>()) {
    std::vector<FourierTerm> terms;
    for (auto t : f->terms) {
      if (t.k == 1) {
        t.a -= s.x();
        t.b -= s.y();
        if (t.a == 0.0 && t.b == 0.0) continue;
      }
      t.a *= scale;
      t.b *= scale;
      terms.push_back(t);
    }
    // Tiny leftovers of the first harmonic from round-off are dropped.
    std::erase_if(terms, [](const FourierTerm& t) {
      return t.k == 1 && std::abs(t.a) < 1e-15 && std::abs(t.b) < 1e-15;
    });
    return SupportFn::fourier(scale * f->c0, std::move(terms));
  }
  if (const auto* g = h.as<GridForm>()) {
    const int n = static_cast<int>(g->samples.size());
    std::vector<double> out(g->samples.size());
    for (int i = 0; i < n; ++i) {
      const double t = kTwoPi * i / n;
      const auto ui = static_cast<std::size_t>(i);
      out[ui] = scale * (g->samples[ui] - s.x() * std::cos(t) - s.y() * std::sin(t));
    }
    return SupportFn::grid(std::move(out));
  }

  const bool centered = s.norm() <= 1e-12;
  if (centered && std::abs(scale - 1.0) <= 1e-15) return h;
  if (centered) {
    if (const auto* poly = h.as<PolygonForm>()) {
      std::vector<double> lengths = poly->lengths;
      for (double& l : lengths) l *= scale;
      return SupportFn::polygon(poly->normals, std::move(lengths));
    }
    if (h.as<SegmentForm>() != nullptr || h.as<TriangleForm>() != nullptr) return h;
  }
  std::vector<std::pair<double, SupportFn>> terms{{scale, h}};
  if (!centered) {
    terms.emplace_back(scale, SupportFn::fourier(0.0, {{1, -s.x(), -s.y()}}));
  }
  return SupportFn::minkowski(terms);
}

MinMax min_max_h(const SupportFn& h) {
  if (const auto* s = h.as<SegmentForm>()) {
    return {0.0, 0.5 * kPi, wrap_pi(s->alpha), wrap_pi(s->alpha + 0.5 * kPi)};
  }
  if (const auto* f = h.as<FourierForm>(); f != nullptr && f->terms.empty()) {
    return {f->c0, f->c0, 0.0, 0.0};
  }
  if (const auto* g = h.as<GridForm>()) {
    // Linear interpolation attains its extremes at the nodes.
    const int n = static_cast<int>(g->samples.size());
    const auto mn = std::min_element(g->samples.begin(), g->samples.end());
    const auto mx = std::max_element(g->samples.begin(), g->samples.end());
    return {*mn, *mx, kTwoPi * static_cast<double>(mn - g->samples.begin()) / n,
            kTwoPi * static_cast<double>(mx - g->samples.begin()) / n};
  }
  const auto kinks = h.kinks();
  const int n = scan_size(h);
  const auto hi = circle_max([&](double t) { return h.value(t); }, n, kinks, 3);
  const auto lo = circle_max([&](double t) { return -h.value(t); }, n, kinks, 3);
  const double tmax = polish_extremum(h, hi.theta, 1.0, kinks);
  const double tmin = polish_extremum(h, lo.theta, -1.0, kinks);
  return {std::min(-lo.value, h.value(tmin)), std::max(hi.value, h.value(tmax)), tmin, tmax};
}

ScanCache scan_cache(const SupportFn& h, int n) {
  ScanCache c{&h, std::vector<double>(static_cast<std::size_t>(n)), h.kinks()};
  for (int i = 0; i < n; ++i) c.values[static_cast<std::size_t>(i)] = h.value(kTwoPi * i / n);
  if (const auto* g = h.as<GridForm>()) {
    const int m = static_cast<int>(g->samples.size());
    for (int i = 0; i < m; ++i) c.exact.push_back(kTwoPi * i / m);
  }
  return c;
}

double hausdorff_distance(const ScanCache& a, const ScanCache& b) {
  if (a.values.size() != b.values.size()) throw std::invalid_argument("hausdorff: scan sizes differ");
  std::vector<double> diff(a.values.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = std::abs(a.values[i] - b.values[i]);
  std::vector<double> exact = a.exact;
  exact.insert(exact.end(), b.exact.begin(), b.exact.end());
  const SupportFn& h1 = *a.h;
  const SupportFn& h2 = *b.h;
  const auto f = [&](double t) { return std::abs(h1.value(t) - h2.value(t)); };
  return best_of(refined_maxima(f, diff, exact, 5)).value;
}

double hausdorff_distance(const SupportFn& h1, const SupportFn& h2) {
  const int n = std::max({2048, h1.sample_count(), h2.sample_count()});
  return hausdorff_distance(scan_cache(h1, n), scan_cache(h2, n));
}

double l2_distance(const SupportFn& h1, const SupportFn& h2) {
  const auto* f1 = h1.as<FourierForm>();
  const auto* f2 = h2.as<FourierForm>();
  if (f1 != nullptr && f2 != nullptr) {
    // Parseval on the coefficient difference.
    std::vector<std::pair<double, double>> diff;
    auto add = [&](const FourierForm& f, double sign) {
      for (const auto& t : f.terms) {
        const auto k = static_cast<std::size_t>(t.k);
        if (diff.size() <= k) diff.resize(k + 1, {0.0, 0.0});
        diff[k].first += sign * t.a;
        diff[k].second += sign * t.b;
      }
    };
    add(*f1, 1.0);
    add(*f2, -1.0);
    const double dc = f1->c0 - f2->c0;
    double s = kTwoPi * dc * dc;
    for (const auto& [a, b] : diff) s += kPi * (a * a + b * b);
    return std::sqrt(s);
  }
  const std::array<const SupportFn*, 2> both{&h1, &h2};
  const auto rule = integration_rule(both);
  const double s = rule.integrate([&](double t) {
    const double d = h1.value(t) - h2.value(t);
    return d * d;
  });
  return std::sqrt(std::max(0.0, s));
}

std::vector<Eigen::Vector2d> boundary_points(const SupportFn& h, const AngleGrid& grid) {
  std::vector<Eigen::Vector2d> out;
  out.reserve(static_cast<std::size_t>(grid.size()));
  for (int i = 0; i < grid.size(); ++i) {
    const double t = grid.node(i);
    const double v = h.value(t);
    const double d = h.derivative(t);
    out.emplace_back(v * std::cos(t) - d * std::sin(t), v * std::sin(t) + d * std::cos(t));
  }
  return out;
}

SupportFn rotated(const SupportFn& h, double phi) {
  return std::visit(
      Overloaded{
          [&](const GridForm& g) {
            const int n = static_cast<int>(g.samples.size());
            std::vector<double> out(g.samples.size());
            for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = grid_value(g, kTwoPi * i / n - phi);
            return SupportFn::grid(std::move(out));
          },
          [&](const SegmentForm& s) { return SupportFn::segment(s.alpha + phi); },
          [&](const PolygonForm& p) {
            std::vector<double> normals = p.normals;
            for (double& t : normals) t += phi;
            return SupportFn::polygon(std::move(normals), p.lengths);
          },
          [&](const TriangleForm& t) {
            TriangleSpec spec{{t.normals[0] + phi, t.normals[1] + phi, t.normals[2] + phi}};
            return triangle_support(spec);
          },
          [&](const FourierForm& f) {
            std::vector<FourierTerm> terms;
            for (const auto& t : f.terms) {
              const double c = std::cos(t.k * phi);
              const double s = std::sin(t.k * phi);
              terms.push_back({t.k, t.a * c - t.b * s, t.a * s + t.b * c});
            }
            return SupportFn::fourier(f.c0, std::move(terms));
          },
          [&](const MinkowskiForm& m) {
            std::vector<std::pair<double, SupportFn>> terms;
            for (const auto& t : m.terms) terms.emplace_back(t.weight, rotated(*t.shape, phi));
            return SupportFn::minkowski(terms);
          },
      },
      h.repr());
}

SupportFn translated(const SupportFn& h, const Eigen::Vector2d& v) {
  if (const auto* f = h.as<FourierForm>()) {
    auto terms = f->terms;
    bool found = false;
    for (auto& t : terms) {
      if (t.k == 1) {
        t.a += v.x();
        t.b += v.y();
        found = true;
      }
    }
    if (!found) terms.push_back({1, v.x(), v.y()});
    return SupportFn::fourier(f->c0, std::move(terms));
  }
  return SupportFn::minkowski({{1.0, h}, {1.0, SupportFn::fourier(0.0, {{1, v.x(), v.y()}})}});
}

ConvexityReport convexity(const SupportFn& h) {
  ConvexityReport rep;
  if (const auto* f = h.as<FourierForm>()) {
    rep.tolerance = 1e-8;
    const int n = 4096;
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const double t = kTwoPi * i / n;
      const double r = fourier_curvature(*f, t);
      if (r < worst) {
        worst = r;
        rep.worst_angle = t;
      }
    }
    rep.worst = worst;
    rep.convex = worst >= -rep.tolerance;
    return rep;
  }
  if (const auto* g = h.as<GridForm>()) {
    const int n = static_cast<int>(g->samples.size());
    const double dx = kTwoPi / n;
    rep.tolerance = 1e-6 / dx;
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const double up = g->samples[static_cast<std::size_t>((i + 1) % n)];
      const double dn = g->samples[static_cast<std::size_t>((i + n - 1) % n)];
      const double r = (up - 2.0 * g->samples[ui] + dn) / (dx * dx) + g->samples[ui];
      if (r < worst) {
        worst = r;
        rep.worst_angle = i * dx;
      }
    }
    rep.worst = worst;
    rep.convex = worst >= -rep.tolerance;
    return rep;
  }
  if (const auto* m = h.as<MinkowskiForm>()) {
    for (const auto& t : m->terms) {
      const auto sub = convexity(*t.shape);
      if (!sub.convex) return sub;
    }
  }
  // Segment, polygon and triangle forms have nonnegative atoms by construction.
  return rep;
}

ClassAResiduals class_a_residuals(const SupportFn& h) {
  ClassAResiduals r;
  r.perimeter_error = std::abs(perimeter(h) - kTwoPi);
  r.steiner_norm = steiner(h).norm();
  r.min_h = min_max_h(h).min;
  return r;
}

double class_a_tolerance(const SupportFn& h) { return h.is_sampled() ? 1e-6 : 1e-9; }

}  // namespace shapes
