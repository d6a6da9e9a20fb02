#include "shapes/farthest.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "shapes/optimize.hpp"

namespace shapes {
namespace {

constexpr int kScan = 4096;

// True when every angle (mod π) lies in one arc of the given length.
bool fits_in_arc(std::vector<double> angles, double arc) {
  if (angles.size() < 2) return true;
  for (double& a : angles) a = wrap_pi(a);
  std::sort(angles.begin(), angles.end());
  double gap = angles.front() + kPi - angles.back();
  for (std::size_t i = 1; i < angles.size(); ++i) gap = std::max(gap, angles[i] - angles[i - 1]);
  return kPi - gap <= arc;
}

// Local maxima of h, refined, plus kinks.
std::vector<std::pair<double, double>> local_maxima(const SupportFn& h) {
  const int n = std::max(kScan, 4 * h.sample_count());
  const double dx = kTwoPi / n;
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = h.value(i * dx);
  std::vector<std::pair<double, double>> out;
  const auto f = [&](double t) { return h.value(t); };
  for (int i = 0; i < n; ++i) {
    const double c = v[static_cast<std::size_t>(i)];
    if (c >= v[static_cast<std::size_t>((i + n - 1) % n)] && c >= v[static_cast<std::size_t>((i + 1) % n)]) {
      const auto opt = golden_section_max(f, (i - 1) * dx, (i + 1) * dx, 1e-11);
      out.emplace_back(wrap_2pi(opt.x), opt.value);
      out.emplace_back(i * dx, c);
    }
  }
  for (double k : h.kinks()) out.emplace_back(wrap_2pi(k), h.value(k));
  return out;
}

// ∫₀^π cos kθ sin θ dθ and ∫₀^π sin kθ sin θ dθ.
double cos_sin_moment(int k) { return k == 1 ? 0.0 : (1.0 + (k % 2 == 0 ? 1.0 : -1.0)) / (1.0 - k * k); }
double sin_sin_moment(int k) { return k == 1 ? 0.5 * kPi : 0.0; }

}  // namespace

FarthestResult farthest_hausdorff(const SupportFn& c) {
  FarthestResult r;
  r.metric = Metric::hausdorff;
  const MinMax mm = min_max_h(c);
  r.q_angle = mm.argmax;
  r.alpha_star = wrap_pi(mm.argmax);
  r.distance = hausdorff_distance(c, SupportFn::segment(r.alpha_star));

  std::vector<double> near;
  for (const auto& [t, v] : local_maxima(c)) {
    if (v >= mm.max - 1e-6) near.push_back(t);
  }
  r.degenerate = !fits_in_arc(near, 0.05);
  return r;
}

double g_profile(const SupportFn& c, double alpha) {
  if (const auto* f = c.as<FourierForm>()) {
    double g = 2.0 * f->c0;
    for (const auto& t : f->terms) {
      const double ck = cos_sin_moment(t.k);
      const double sk = sin_sin_moment(t.k);
      const double ca = std::cos(t.k * alpha);
      const double sa = std::sin(t.k * alpha);
      g += t.a * (ca * ck - sa * sk) + t.b * (sa * ck + ca * sk);
    }
    return g;
  }
  std::vector<double> breaks = c.kinks();
  const int n = c.sample_count();
  if (n > 0) {
    for (int i = 0; i < n; ++i) breaks.push_back(kTwoPi * i / n);
  }
  // Breakpoints in θ-coordinates: θ + α = kink.
  std::vector<double> local;
  for (double b : breaks) {
    double x = wrap_2pi(b - alpha);
    if (x > 0.0 && x < kPi) local.push_back(x);
  }
  const double panel = n > 0 ? std::min(kDefaultPanel, kTwoPi / n) : kDefaultPanel;
  const auto rule = gauss_panels(0.0, kPi, local, panel);
  return rule.integrate([&](double t) { return c.value(t + alpha) * std::sin(t); });
}

FarthestResult farthest_l2(const SupportFn& c) {
  FarthestResult r;
  r.metric = Metric::l2;
  constexpr int m = 512;
  const double da = kPi / m;
  r.g_samples.resize(m);
  for (int j = 0; j < m; ++j) r.g_samples[static_cast<std::size_t>(j)] = g_profile(c, j * da);
  const auto [lo, hi] = std::minmax_element(r.g_samples.begin(), r.g_samples.end());
  r.degenerate = (*hi - *lo) < 1e-8;

  const auto j0 = static_cast<int>(lo - r.g_samples.begin());
  const auto neg = [&](double a) { return -g_profile(c, a); };
  const auto opt = golden_section_max(neg, (j0 - 1) * da, (j0 + 1) * da, 1e-9);
  double alpha = wrap_pi(opt.x);
  double gmin = -opt.value;
  if (r.g_samples[static_cast<std::size_t>(j0)] <= gmin) {
    alpha = j0 * da;
    gmin = r.g_samples[static_cast<std::size_t>(j0)];
  }
  r.alpha_star = alpha;
  const double d2 = kPi * kPi * kPi / 4.0 + integral_h_sq(c) - kTwoPi * gmin;
  r.distance = std::sqrt(std::max(0.0, d2));
  return r;
}

std::vector<double> hausdorff_segment_profile(const SupportFn& c, int m) {
  // Scan grid containing every β_j and β_j + π as nodes.
  const int n = 2 * m * std::max(1, (std::max(kScan, c.sample_count()) + 2 * m - 1) / (2 * m));
  const int r = n / (2 * m);
  const double dx = kTwoPi / n;
  std::vector<double> hc(static_cast<std::size_t>(2 * n));
  std::vector<double> table(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    hc[static_cast<std::size_t>(i)] = hc[static_cast<std::size_t>(i + n)] = c.value(i * dx);
    table[static_cast<std::size_t>(i)] = 0.5 * kPi * std::abs(std::sin(i * dx));
  }
  std::vector<double> exact_c = c.kinks();
  if (const auto* g = c.as<GridForm>()) {
    const int k = static_cast<int>(g->samples.size());
    for (int i = 0; i < k; ++i) exact_c.push_back(kTwoPi * i / k);
  }

  constexpr int kRefine = 5;
  std::vector<double> diff(static_cast<std::size_t>(n));
  std::vector<double> out(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const double beta = kPi * j / m;
    // diff[i] = |h_C(θ_i) − h_β(θ_i)| with θ_i − β = θ_{i − jr}.
    const int shift = j * r;
    const double* hs = hc.data() + shift;
    for (int i = 0; i < n; ++i) diff[static_cast<std::size_t>(i)] = std::abs(hs[i] - table[static_cast<std::size_t>(i)]);
    // Largest local maxima; index i here is the node θ_{i + shift}.
    std::array<std::pair<double, int>, kRefine> top;
    top.fill({-1.0, -1});
    for (int i = 0; i < n; ++i) {
      const double v = diff[static_cast<std::size_t>(i)];
      if (v <= top[kRefine - 1].first) continue;
      const double l = diff[static_cast<std::size_t>(i == 0 ? n - 1 : i - 1)];
      const double rr = diff[static_cast<std::size_t>(i == n - 1 ? 0 : i + 1)];
      if (v < l || v < rr) continue;
      int k = kRefine - 1;
      while (k > 0 && top[static_cast<std::size_t>(k - 1)].first < v) {
        top[static_cast<std::size_t>(k)] = top[static_cast<std::size_t>(k - 1)];
        --k;
      }
      top[static_cast<std::size_t>(k)] = {v, i};
    }
    const auto f = [&](double t) { return std::abs(c.value(t) - 0.5 * kPi * std::abs(std::sin(t - beta))); };
    double best = top[0].first;
    for (const auto& [v, i] : top) {
      if (i < 0) break;
      const double t = (i + shift) * dx;
      std::uintmax_t iters = 60;
      const auto opt = boost::math::tools::brent_find_minima([&](double x) { return -f(x); }, t - dx, t + dx, 40, iters);
      best = std::max(best, -opt.second);
    }
    for (double k : exact_c) best = std::max(best, f(k));
    best = std::max({best, f(beta), f(beta + kPi)});
    out[static_cast<std::size_t>(j)] = best;
  }
  return out;
}

std::vector<std::pair<std::string, double>> SharpInequalityReport::named() const {
  return {{"max_h_minus_half_pi", max_h_minus_half_pi},
          {"half_pi_minus_min_plus_max", half_pi_minus_min_plus_max},
          {"h1_norm_minus_16pi_over_3", h1_norm_minus_16pi_over_3},
          {"dh_sq_minus_h_sq", dh_sq_minus_h_sq},
          {"h_sq_minus_quarter_dh_sq_minus_2pi", h_sq_minus_quarter_dh_sq_minus_2pi}};
}

SharpInequalityReport sharp_inequality_report(const SupportFn& c) {
  SharpInequalityReport r;
  const MinMax mm = min_max_h(c);
  const double h2 = integral_h_sq(c);
  const double dh2 = integral_dh_sq(c);
  r.max_h_minus_half_pi = mm.max - 0.5 * kPi;
  r.half_pi_minus_min_plus_max = 0.5 * kPi - (mm.min + mm.max);
  r.h1_norm_minus_16pi_over_3 = h2 + dh2 - 16.0 * kPi / 3.0;
  r.dh_sq_minus_h_sq = dh2 - h2;
  r.h_sq_minus_quarter_dh_sq_minus_2pi = h2 - 0.25 * dh2 - kTwoPi;
  return r;
}

}  // namespace shapes
