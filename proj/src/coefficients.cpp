#include "shapes/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace shapes {

CoeffFn CoeffFn::constant(double v) {
  if (!std::isfinite(v)) throw CoefficientError("coefficient: non-finite constant");
  CoeffFn f;
  f.kind_ = Kind::constant;
  f.c0_ = v;
  return f;
}

CoeffFn CoeffFn::grid(std::vector<double> samples) {
  if (samples.size() < 2) throw CoefficientError("coefficient: grid needs at least two samples");
  for (double s : samples) {
    if (!std::isfinite(s)) throw CoefficientError("coefficient: non-finite grid sample");
  }
  CoeffFn f;
  f.kind_ = Kind::grid;
  f.samples_ = std::move(samples);
  return f;
}

CoeffFn CoeffFn::bumps(std::vector<Bump> bumps, double outside) {
  if (!std::isfinite(outside)) throw CoefficientError("coefficient: non-finite outside value");
  for (const auto& b : bumps) {
    if (!std::isfinite(b.center) || !std::isfinite(b.inside) || !std::isfinite(b.width)) {
      throw CoefficientError("coefficient: non-finite bump field");
    }
    if (!(b.width > 0.0) || b.width > kPi) throw CoefficientError("coefficient: bump width must be in (0, pi]");
  }
  CoeffFn f;
  f.kind_ = Kind::bumps;
  f.bumps_ = std::move(bumps);
  f.c0_ = outside;
  return f;
}

CoeffFn CoeffFn::fourier(double c0, std::vector<FourierTerm> terms) {
  if (!std::isfinite(c0)) throw CoefficientError("coefficient: non-finite c0");
  for (const auto& t : terms) {
    if (t.k < 1 || !std::isfinite(t.a) || !std::isfinite(t.b)) {
      throw CoefficientError("coefficient: bad Fourier term");
    }
  }
  CoeffFn f;
  f.kind_ = Kind::fourier;
  f.c0_ = c0;
  f.terms_ = std::move(terms);
  return f;
}

double CoeffFn::value(double theta) const {
  switch (kind_) {
    case Kind::constant:
      return c0_;
    case Kind::grid: {
      const int n = static_cast<int>(samples_.size());
      const double x = wrap_2pi(theta) / (kTwoPi / n);
      const int i = std::min(static_cast<int>(std::floor(x)), n - 1);
      const double t = x - i;
      return (1.0 - t) * samples_[static_cast<std::size_t>(i)] + t * samples_[static_cast<std::size_t>((i + 1) % n)];
    }
    case Kind::bumps:
      for (const auto& b : bumps_) {
        if (circular_distance(theta, b.center) < b.width) return b.inside;
      }
      return c0_;
    case Kind::fourier: {
      double v = c0_;
      for (const auto& t : terms_) v += t.a * std::cos(t.k * theta) + t.b * std::sin(t.k * theta);
      return v;
    }
  }
  return 0.0;
}

double CoeffFn::average(double lo, double hi) const {
  if (kind_ == Kind::constant) return c0_;
  if (!(hi > lo)) return value(lo);
  std::vector<double> inner;
  for (double b : breaks()) {
    // Lift each break into [lo, hi) if it has a representative there.
    const double x = lo + wrap_2pi(b - lo);
    if (x > lo && x < hi) inner.push_back(x);
  }
  const auto rule = gauss_panels(lo, hi, inner, hi - lo);
  return rule.integrate([&](double t) { return value(t); }) / (hi - lo);
}

std::vector<double> CoeffFn::breaks() const {
  std::vector<double> out;
  if (kind_ == Kind::grid) {
    const auto n = samples_.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(kTwoPi * static_cast<double>(i) / static_cast<double>(n));
  } else if (kind_ == Kind::bumps) {
    for (const auto& b : bumps_) {
      if (b.width >= kPi) continue;
      out.push_back(wrap_2pi(b.center - b.width));
      out.push_back(wrap_2pi(b.center + b.width));
    }
  }
  return out;
}

int CoeffFn::sample_count() const { return kind_ == Kind::grid ? static_cast<int>(samples_.size()) : 0; }

double CoeffFn::min() const {
  switch (kind_) {
    case Kind::constant:
      return c0_;
    case Kind::grid:
      return *std::min_element(samples_.begin(), samples_.end());
    case Kind::bumps: {
      double m = c0_;
      for (const auto& b : bumps_) m = std::min(m, b.inside);
      return m;
    }
    case Kind::fourier: {
      double m = value(0.0);
      for (int i = 1; i < 8192; ++i) m = std::min(m, value(kTwoPi * i / 8192));
      return m;
    }
  }
  return 0.0;
}

bool CoeffFn::is_zero() const {
  switch (kind_) {
    case Kind::constant:
      return c0_ == 0.0;
    case Kind::grid:
      return std::all_of(samples_.begin(), samples_.end(), [](double s) { return s == 0.0; });
    case Kind::bumps:
      return c0_ == 0.0 && std::all_of(bumps_.begin(), bumps_.end(), [](const Bump& b) { return b.inside == 0.0; });
    case Kind::fourier:
      return c0_ == 0.0 &&
             std::all_of(terms_.begin(), terms_.end(), [](const FourierTerm& t) { return t.a == 0.0 && t.b == 0.0; });
  }
  return false;
}

void validate(const QuadCoeffs& q) {
  if (q.a.min() < -1e-12) throw CoefficientError("coefficient a takes negative values");
  if (q.b.min() < -1e-12) throw CoefficientError("coefficient b takes negative values");
  constexpr int n = 1 << 16;
  int small = 0;
  for (int i = 0; i < n; ++i) {
    const double t = kTwoPi * (i + 0.5) / n;
    if (q.a.value(t) + q.b.value(t) <= 1e-12) ++small;
  }
  if (small >= static_cast<int>(1e-3 * n)) {
    throw CoefficientError("coefficients a and b both vanish on a set of positive measure");
  }
}

std::vector<double> coefficient_breaks(const QuadCoeffs& q) {
  std::vector<double> out;
  for (const CoeffFn* f : {&q.a, &q.b, &q.c, &q.d}) {
    auto b = f->breaks();
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

int coefficient_sample_count(const QuadCoeffs& q) {
  return std::max({q.a.sample_count(), q.b.sample_count(), q.c.sample_count(), q.d.sample_count()});
}

CoeffFn bump_profile(const std::vector<double>& centers, double eps, double inside, double outside) {
  std::vector<Bump> b;
  for (double c : centers) b.push_back({c, eps, inside});
  return CoeffFn::bumps(std::move(b), outside);
}

namespace {

// Nonnegative: mean exceeds the sum of amplitudes.
CoeffFn random_nonnegative(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  switch (pick(rng)) {
    case 0:
      return CoeffFn::constant(0.1 + unit(rng));
    case 1: {
      std::uniform_int_distribution<int> count(1, 4);
      const int m = count(rng);
      std::vector<Bump> bumps;
      for (int i = 0; i < m; ++i) bumps.push_back({kTwoPi * unit(rng), 0.05 + 0.4 * unit(rng), 0.2 + 2.0 * unit(rng)});
      return CoeffFn::bumps(std::move(bumps), 0.01 + 0.2 * unit(rng));
    }
    default: {
      std::vector<FourierTerm> terms;
      double total = 0.0;
      for (int k = 1; k <= 4; ++k) {
        FourierTerm t{k, unit(rng) - 0.5, unit(rng) - 0.5};
        total += std::abs(t.a) + std::abs(t.b);
        terms.push_back(t);
      }
      return CoeffFn::fourier(total * (1.0 + unit(rng)) + 0.01, std::move(terms));
    }
  }
}

CoeffFn random_signed(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<FourierTerm> terms;
  for (int k = 1; k <= 3; ++k) terms.push_back({k, 0.3 * unit(rng), 0.3 * unit(rng)});
  return CoeffFn::fourier(0.3 * unit(rng), std::move(terms));
}

}  // namespace

QuadCoeffs random_quad_coeffs(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  QuadCoeffs q;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (unit(rng) < 0.25) {
    // Three jittered bumps on a over a small b: triangles tend to win here.
    const double base = kTwoPi * unit(rng);
    std::vector<Bump> bumps;
    for (int i = 0; i < 3; ++i) {
      bumps.push_back({base + kTwoPi * i / 3.0 + 0.2 * (unit(rng) - 0.5), 0.03 + 0.09 * unit(rng), 1.0 + 2.0 * unit(rng)});
    }
    q.a = CoeffFn::bumps(std::move(bumps), 1e-3 + 0.01 * unit(rng));
    q.b = CoeffFn::constant(1e-3 + 0.01 * unit(rng));
    return q;
  }
  q.a = random_nonnegative(rng);
  q.b = random_nonnegative(rng);
  std::bernoulli_distribution coin(0.5);
  if (coin(rng)) q.c = random_signed(rng);
  if (coin(rng)) q.d = random_signed(rng);
  return q;
}

}  // namespace shapes
