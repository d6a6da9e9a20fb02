// Acceptance battery. Usage: acceptance [criterion ...]; no arguments runs all.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bodies.hpp"
#include "shapes/criticality.hpp"
#include "shapes/farthest.hpp"
#include "shapes/optimize.hpp"
#include "shapes/quad_functional.hpp"
#include "shapes/random_bodies.hpp"
#include "shapes/weingarten.hpp"

using namespace shapes;

namespace {

// Tolerances, pinned.
constexpr double kTolKernel = 1e-12;
constexpr double kTolTriangleMatch = 1e-10;
constexpr double kTolClosure = 1e-12;
constexpr double kTolPerimeter = 1e-10;
constexpr double kTolSteiner = 1e-8;
constexpr double kTolSharp = 1e-6;
constexpr double kTolSegmentEquality = 1e-9;
constexpr double kTolOrthSegments = 1e-9;
constexpr double kTolFarthest = 1e-6;
constexpr double kTolGProfile = 1e-6;
constexpr double kTolAlphaL2 = 1e-4;
constexpr double kMinAlphaGap = 0.05;
constexpr double kTolWidth = 1e-8;
constexpr double kTolSolverGap = 1e-3;
constexpr double kRatioLo = 1.5;
constexpr double kRatioHi = 2.05;
constexpr double kTolCritical = 1e-6;
constexpr double kTolPartialSum = 1e-10;
constexpr double kTolMinimizer = 1e-6;
constexpr double kG4Margin = 1e-4;
constexpr double kG4Neighbourhood = 1e-2;

// Regression constants derived once by independent scans.
constexpr double kG4Minimum = 0.5;
constexpr double kLobedGap = 0.270892897887652;  // θ_Q − π/2 for h = 1 − 0.1cos2θ + 0.05cos3θ

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [violated: " << what << "]";
    }
  }
};

SupportFn lobed() { return SupportFn::fourier(1.0, {{2, -0.1, 0.0}, {3, 0.05, 0.0}}); }

double max_abs_diff_on_grid(const SupportFn& a, const std::function<double(double)>& f, int n) {
  double m = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = kTwoPi * i / n;
    m = std::max(m, std::abs(a.value(t) - f(t)));
  }
  return m;
}

void criterion1(Outcome& o) {
  double worst = 0.0;
  for (int k = 0; k < 8; ++k) {
    const double alpha = 0.37 + k * kPi / 8.0;
    CurvatureMeasure r;
    r.atoms = {{wrap_2pi(alpha), kPi}, {wrap_2pi(alpha + kPi), kPi}};
    const SupportFn h = solve(r);
    worst = std::max(worst, max_abs_diff_on_grid(h, [&](double t) { return 0.5 * kPi * std::abs(std::sin(t - alpha)); }, 2048));
  }
  o.detail << "max |h - (pi/2)|sin(theta-alpha)|| = " << worst;
  o.require(worst <= kTolKernel, "kernel pinning");
}

TriangleSpec random_triangle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  while (true) {
    const double t1 = kTwoPi * u(rng);
    const double g1 = kPi * u(rng);
    const double g2 = kPi * u(rng);
    TriangleSpec t{{t1, t1 + g1, t1 + g1 + g2}};
    if (!t.violation() && t.margin() > 1e-3) return t;
  }
}

void criterion2(Outcome& o) {
  std::mt19937_64 rng(2024);
  double match = 0.0, closure = 0.0, per = 0.0, st = 0.0;
  for (int k = 0; k < 100; ++k) {
    const TriangleSpec t = random_triangle(rng);
    const SupportFn ht = triangle_support(t);
    const auto a = t.lengths();
    CurvatureMeasure r;
    for (std::size_t i = 0; i < 3; ++i) r.atoms.push_back({wrap_2pi(t.theta[i]), a[i]});
    const SupportFn hs = solve(r);
    match = std::max(match, max_abs_diff_on_grid(ht, [&](double x) { return hs.value(x); }, 720));
    const auto c = closure_identities(t);
    closure = std::max({closure, std::abs(c.cos_sum), std::abs(c.sin_sum), std::abs(c.denominator)});
    per = std::max(per, std::abs(perimeter(ht) - kTwoPi));
    st = std::max(st, steiner(ht).norm());
  }
  o.detail << "match " << match << ", closure " << closure << ", perimeter " << per << ", steiner " << st;
  o.require(match <= kTolTriangleMatch, "closed form vs kernel");
  o.require(closure <= kTolClosure, "closure identities");
  o.require(per <= kTolPerimeter, "perimeter");
  o.require(st <= kTolSteiner, "steiner");
}

void criterion3(Outcome& o) {
  double worst = -1e300, seg_eq = 0.0;
  int segments = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const SupportFn c = testing_bodies::body(30000 + s);
    const auto rep = sharp_inequality_report(c);
    for (const auto& [name, v] : rep.named()) worst = std::max(worst, v);
    if (c.as<SegmentForm>() != nullptr) {
      ++segments;
      seg_eq = std::max({seg_eq, std::abs(rep.max_h_minus_half_pi), std::abs(rep.half_pi_minus_min_plus_max)});
    }
  }
  o.detail << "largest residual " << worst << ", segment equality " << seg_eq << " over " << segments << " segments";
  o.require(worst <= kTolSharp, "residuals");
  o.require(segments > 0 && seg_eq <= kTolSegmentEquality, "segment equality");
}

void criterion4(Outcome& o) {
  const double d0 = hausdorff_distance(SupportFn::segment(0.0), SupportFn::segment(0.5 * kPi));
  o.detail << "|d_H(S0,S_pi/2) - pi/2| = " << std::abs(d0 - 0.5 * kPi);
  o.require(std::abs(d0 - 0.5 * kPi) <= kTolOrthSegments, "orthogonal segments");

  constexpr int n = 2048;
  std::vector<SupportFn> challengers;
  for (std::uint64_t s = 0; s < 200; ++s) challengers.push_back(testing_bodies::body(50000 + s));
  std::vector<ScanCache> cc;
  for (const auto& k : challengers) cc.push_back(scan_cache(k, n));

  double excess = -1e300;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const SupportFn c = testing_bodies::body(40000 + s);
    const FarthestResult r = farthest_hausdorff(c);
    const ScanCache ccache = scan_cache(c, n);
    for (const auto& k : cc) excess = std::max(excess, hausdorff_distance(ccache, k) - r.distance);
    const auto prof = hausdorff_segment_profile(c, 4096);
    excess = std::max(excess, *std::max_element(prof.begin(), prof.end()) - r.distance);
  }
  o.detail << ", largest challenger excess " << excess;
  o.require(excess <= kTolFarthest, "farthest certificate");
}

void criterion5(Outcome& o) {
  const SupportFn c = lobed();
  // Same body behind a Minkowski wrapper exercises the quadrature path.
  const SupportFn wrapped = SupportFn::minkowski({{1.0, c}});
  double g_err = 0.0;
  for (int j = 0; j < 512; ++j) {
    const double a = kPi * j / 512;
    const double exact = 2.0 + std::cos(2.0 * a) / 15.0;
    g_err = std::max({g_err, std::abs(g_profile(c, a) - exact), std::abs(g_profile(wrapped, a) - exact)});
  }
  const FarthestResult l2 = farthest_l2(c);
  const FarthestResult hd = farthest_hausdorff(c);
  const double alpha_err = circular_distance(l2.alpha_star, 0.0, kPi);
  const double gap = circular_distance(l2.alpha_star, hd.alpha_star, kPi);
  o.detail << "g error " << g_err << ", L2 alpha* " << l2.alpha_star << " (distance to 0 mod pi " << alpha_err
           << "), Hausdorff alpha* " << hd.alpha_star << ", gap " << gap << " (frozen " << kLobedGap << ")";
  o.require(g_err <= kTolGProfile, "g profile");
  o.require(alpha_err <= kTolAlphaL2, "L2 alpha* = 0 mod pi");
  o.require(gap > kMinAlphaGap, "alpha gap");
  o.require(std::abs(gap - kLobedGap) <= 1e-6, "frozen gap");
}

void criterion6(Outcome& o) {
  const SupportFn c = SupportFn::fourier(1.0, {{3, 0.1, 0.0}});
  double lo = 1e300, hi = -1e300, cross = 0.0;
  for (int j = 0; j < 1024; ++j) {
    const SupportFn s = SupportFn::segment(kPi * j / 1024);
    const double d = l2_distance(c, s);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
    const std::array<const SupportFn*, 2> both{&c, &s};
    const double ip = integration_rule(both).integrate([&](double t) { return c.value(t) * s.value(t); });
    cross = std::max(cross, std::abs(ip - kTwoPi));
  }
  o.detail << "d2 variation " << hi - lo << ", max |int h_C h_alpha - 2pi| " << cross;
  o.require(hi - lo <= kTolWidth, "d2 constant in alpha");
  o.require(cross <= kTolWidth, "inner product");
}

void criterion7(Outcome& o) {
  // At n = 256 one near-tie draw resolves to a sliver triangle; 512 is clean.
  constexpr int n = 512;
  int bad_atoms = 0, bad_class = 0, disagree = 0;
  double worst_gap = 0.0;
  std::map<std::string, int> counts;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const QuadCoeffs q = random_quad_coeffs(70000 + s);
    ConeOptions opts;
    opts.seed = 7 + s;
    const ConeSolution cone = maximize_over_cone(q, n, opts);
    const TriangleSearchResult tri = maximize_over_triangles(q);
    const Shape tri_shape = tri.segment_wins ? Shape::segment : Shape::triangle;
    ++counts[to_string(cone.classification)];
    if (cone.atoms.size() > 3) ++bad_atoms;
    if (cone.classification == Shape::other) ++bad_class;
    const double gap = std::abs(cone.value - tri.value);
    worst_gap = std::max(worst_gap, gap);
    if (gap > kTolSolverGap || cone.classification != tri_shape) ++disagree;
  }
  o.detail << "segments " << counts["segment"] << ", triangles " << counts["triangle"] << ", other "
           << counts["other"] << ", >3 atoms " << bad_atoms << ", disagreements " << disagree << ", worst gap "
           << worst_gap;
  o.require(bad_atoms == 0, "at most 3 atoms");
  o.require(bad_class == 0, "segment or triangle");
  o.require(disagree == 0, "cross-solver agreement");
}

QuadCoeffs three_bumps(bool on_a) {
  const CoeffFn bumps = bump_profile({0.0, kTwoPi / 3.0, 2.0 * kTwoPi / 3.0}, 0.05, 1.0, 1e-3);
  QuadCoeffs q;
  if (on_a) {
    q.a = bumps;
    q.b = CoeffFn::constant(1e-3);
  } else {
    q.b = bumps;
  }
  return q;
}

void criterion8(Outcome& o) {
  const QuadCoeffs q = three_bumps(false);
  const TriangleSearchResult r = maximize_over_triangles(q);
  const double eq = eval_J(q, triangle_support(TriangleSpec{{0.0, kTwoPi / 3.0, 2.0 * kTwoPi / 3.0}}));
  const double ratio = eq / r.segment_value;
  o.detail << "best triangle " << r.triangle_value << ", best segment " << r.segment_value << ", J(equilateral) "
           << eq << ", ratio " << ratio;
  o.require(r.triangle_value > r.segment_value, "triangle beats segments");
  o.require(ratio >= kRatioLo && ratio <= kRatioHi, "ratio in [1.5, 2.05]");

  // Same bumps on the h^2 coefficient, reported for reference.
  const QuadCoeffs qa = three_bumps(true);
  const TriangleSearchResult ra = maximize_over_triangles(qa);
  o.detail << "; a-coefficient variant: triangle " << ra.triangle_value << ", segment " << ra.segment_value
           << ", ratio " << ra.triangle_value / ra.segment_value;
}

void criterion9(Outcome& o) {
  // Generic target: a smooth body with no symmetry.
  const SupportFn c = random_class_A(90001, BodyStyle::smooth);
  const TriangleSpec t = closest_triangle(c);
  const auto rep = triangle_criticality(t, c);
  double stat = 0.0, fd = 0.0;
  for (std::size_t j = 0; j < 3; ++j) {
    stat = std::max(stat, std::abs(rep.stationarity[j]));
    fd = std::max(fd, std::abs(rep.fd_gradient[j]));
  }
  o.detail << "closest triangle stationarity " << stat << ", FD gradient " << fd;
  o.require(stat <= kTolCritical, "stationarity residuals");
  o.require(fd <= kTolCritical, "FD gradient");

  std::mt19937_64 rng(99);
  double sum = 0.0, fd_err = 0.0;
  for (int k = 0; k < 100; ++k) {
    const TriangleSpec s = random_triangle(rng);
    const auto p = length_partials(s);
    sum = std::max(sum, std::abs(p[0][0] + p[0][1] + p[0][2]));
    for (std::size_t j = 0; j < 3; ++j) {
      TriangleSpec up = s, dn = s;
      up.theta[j] += 1e-6;
      dn.theta[j] -= 1e-6;
      const double d = (up.lengths()[0] - dn.lengths()[0]) / 2e-6;
      fd_err = std::max(fd_err, std::abs(d - p[0][j]) / std::max(1.0, std::abs(d)));
    }
  }
  o.detail << "; sum of da1/dtheta_j " << sum << " (FD agreement " << fd_err << ")";
  o.require(sum <= kTolPartialSum, "partials sum to zero");
  o.require(fd_err <= 1e-5, "partials match finite differences");

  // Equilateral triangle against the disc: critical by symmetry.
  const TriangleSpec eq{{0.0, kTwoPi / 3.0, 2.0 * kTwoPi / 3.0}};
  const auto re = triangle_criticality(eq, SupportFn::disc());
  double efd = 0.0, corrected = 0.0;
  for (double g : re.fd_gradient) efd = std::max(efd, std::abs(g));
  for (double r : re.corrected_relation_residuals) corrected = std::max(corrected, std::abs(r));
  o.detail << "; equilateral vs disc: FD gradient " << efd << ", I = " << re.i
           << ", corrected relations " << corrected;
  o.require(std::abs(re.i) <= kTolCritical, "|I| at critical equilateral");
}

void criterion10(Outcome& o) {
  constexpr int n = 10000;
  std::vector<double> v(n + 1);
  for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = green::g4(kPi * i / n);
  const double lo = *std::min_element(v.begin(), v.end());
  // Local minima of the scan, refined.
  std::vector<double> located;
  for (int i = 0; i <= n; ++i) {
    const double c = v[static_cast<std::size_t>(i)];
    const double l = i > 0 ? v[static_cast<std::size_t>(i - 1)] : 1e300;
    const double r = i < n ? v[static_cast<std::size_t>(i + 1)] : 1e300;
    if (c <= l && c <= r && c <= lo + 1e-9) {
      const double step = kPi / n;
      const auto opt = golden_section_max([](double t) { return -green::g4(t); }, std::max(0.0, (i - 1) * step),
                                          std::min(kPi, (i + 1) * step), 1e-12);
      located.push_back(opt.x);
    }
  }
  const std::vector<double> expected{0.0, 0.5 * kPi, kPi};
  double loc_err = 0.0;
  for (double e : expected) {
    double d = 1e300;
    for (double x : located) d = std::min(d, std::abs(x - e));
    loc_err = std::max(loc_err, d);
  }
  double margin = 1e300;
  for (int i = 0; i <= n; ++i) {
    const double t = kPi * i / n;
    bool near = false;
    for (double e : expected) near = near || std::abs(t - e) < kG4Neighbourhood;
    if (!near) margin = std::min(margin, v[static_cast<std::size_t>(i)] - kG4Minimum);
  }
  o.detail << "minimum " << lo << " (frozen " << kG4Minimum << "), " << located.size()
           << " minimizers, location error " << loc_err << ", margin outside neighbourhoods " << margin;
  o.require(std::abs(lo - kG4Minimum) <= 1e-12, "frozen minimum");
  o.require(located.size() == 3 && loc_err <= kTolMinimizer, "minimizers at 0, pi/2, pi");
  o.require(margin >= kG4Margin, "strict margin");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> all{
      {"kernel pinning", criterion1},
      {"triangle consistency", criterion2},
      {"sharp inequalities", criterion3},
      {"Hausdorff farthest", criterion4},
      {"L2 farthest, lobed body", criterion5},
      {"constant-width indifference", criterion6},
      {"segment-or-triangle witness", criterion7},
      {"bump counterexample", criterion8},
      {"criticality algebra", criterion9},
      {"G4 battery", criterion10},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty()) {
    for (int i = 1; i <= static_cast<int>(all.size()); ++i) selected.push_back(i);
  }
  int failed = 0;
  for (int k : selected) {
    if (k < 1 || k > static_cast<int>(all.size())) {
      std::printf("criterion %d: unknown\n", k);
      return 2;
    }
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    all[static_cast<std::size_t>(k - 1)].second(o);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d (%s): %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", k,
                all[static_cast<std::size_t>(k - 1)].first.c_str(), o.detail.str().c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
