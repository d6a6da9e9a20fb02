#include <cmath>

#include "bodies.hpp"
#include "doctest.h"
#include "oracle.hpp"
#include "shapes/farthest.hpp"
#include "shapes/weingarten.hpp"

using namespace shapes;
using doctest::Approx;

namespace {

SupportFn lobed() { return SupportFn::fourier(1.0, {{2, -0.1, 0.0}, {3, 0.05, 0.0}}); }

double best_segment_hausdorff(const SupportFn& c, int m) {
  double best = 0.0;
  for (int j = 0; j < m; ++j) best = std::max(best, hausdorff_distance(c, SupportFn::segment(kPi * j / m)));
  return best;
}

}  // namespace

TEST_CASE("hausdorff farthest from the disc is degenerate") {
  const FarthestResult r = farthest_hausdorff(SupportFn::disc());
  CHECK(r.distance == Approx(1.0).epsilon(1e-12));
  CHECK(r.degenerate);
  CHECK(r.distance >= best_segment_hausdorff(SupportFn::disc(), 256) - 1e-12);
}

TEST_CASE("hausdorff farthest from a segment is the orthogonal segment") {
  const FarthestResult r = farthest_hausdorff(SupportFn::segment(0.0));
  CHECK(r.alpha_star == Approx(kPi / 2).epsilon(1e-12));
  CHECK(r.distance == Approx(kPi / 2).epsilon(1e-12));
}

TEST_CASE("hausdorff farthest beats a fine segment grid") {
  const SupportFn c = lobed();
  const FarthestResult r = farthest_hausdorff(c);
  const auto prof = hausdorff_segment_profile(c, 10000);
  CHECK(r.distance >= *std::max_element(prof.begin(), prof.end()) - 1e-8);
  CHECK(r.q_angle == Approx(oracle::argmax([&](double t) { return c.value(t); }, 0, kPi, 1000000)).epsilon(1e-5));
  CHECK(r.distance == Approx(hausdorff_distance(c, SupportFn::segment(r.alpha_star))).epsilon(1e-12));
}

TEST_CASE("segment profile agrees with direct distances") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const SupportFn c = testing_bodies::body(seed);
    const auto prof = hausdorff_segment_profile(c, 64);
    for (int j = 0; j < 64; j += 7) {
      CHECK(prof[static_cast<std::size_t>(j)] ==
            Approx(hausdorff_distance(c, SupportFn::segment(kPi * j / 64))).epsilon(1e-9));
    }
  }
}

TEST_CASE("hausdorff farthest on random bodies") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const SupportFn c = testing_bodies::body(seed);
    const FarthestResult r = farthest_hausdorff(c);
    CHECK(r.alpha_star >= 0.0);
    CHECK(r.alpha_star < kPi);
    const auto prof = hausdorff_segment_profile(c, 4096);
    CHECK(r.distance >= *std::max_element(prof.begin(), prof.end()) - 1e-8);
  }
}

TEST_CASE("g profile") {
  for (double a : {0.0, 0.4, 1.7, 3.0}) CHECK(g_profile(SupportFn::disc(), a) == Approx(2.0).epsilon(1e-13));
  const SupportFn c = lobed();
  for (double a = 0.0; a < kPi; a += 0.1) {
    CHECK(g_profile(c, a) == Approx(2.0 + std::cos(2 * a) / 15).epsilon(1e-12));
    const double ref = oracle::integrate([&](double t) { return c.value(t + a) * std::sin(t); }, 0, kPi);
    CHECK(g_profile(c, a) == Approx(ref).epsilon(1e-9));
  }
  const SupportFn odd = SupportFn::fourier(1.0, {{3, 0.08, -0.02}, {5, 0.01, 0.01}});
  for (double a = 0.0; a < kPi; a += 0.3) CHECK(g_profile(odd, a) == Approx(2.0).epsilon(1e-12));
}

TEST_CASE("integral of g over the circle is twice the perimeter") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const SupportFn c = testing_bodies::body(seed);
    const double total = oracle::integrate([&](double a) { return g_profile(c, a); }, 0, kTwoPi, 4000);
    CHECK(total == Approx(4 * kPi).epsilon(1e-6));
  }
}

TEST_CASE("l2 farthest maximizes the distance to segments") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SupportFn c = testing_bodies::body(seed);
    const FarthestResult r = farthest_l2(c);
    double best = 0.0;
    for (int j = 0; j < 512; ++j) best = std::max(best, l2_distance(c, SupportFn::segment(kPi * j / 512)));
    CHECK(r.distance >= best - 1e-9);
    CHECK(r.distance == Approx(l2_distance(c, SupportFn::segment(r.alpha_star))).epsilon(1e-9));
  }
}

TEST_CASE("l2 distance expansion") {
  const SupportFn c = lobed();
  for (double a : {0.0, 0.7, kPi / 2}) {
    const double d = l2_distance(c, SupportFn::segment(a));
    CHECK(d * d == Approx(kPi * kPi * kPi / 4 + integral_h_sq(c) - kTwoPi * g_profile(c, a)).epsilon(1e-12));
  }
}

TEST_CASE("l2 farthest from the disc and from constant width bodies") {
  const FarthestResult d = farthest_l2(SupportFn::disc());
  CHECK(d.degenerate);
  CHECK(d.distance == Approx(std::sqrt(kPi * kPi * kPi / 4 - kTwoPi)).epsilon(1e-12));
  CHECK(farthest_l2(SupportFn::fourier(1.0, {{3, 0.1, 0.0}})).degenerate);
  CHECK_FALSE(farthest_l2(lobed()).degenerate);
}

TEST_CASE("l2 farthest from the equilateral triangle") {
  const SupportFn t = triangle_support(TriangleSpec{{0.0, kTwoPi / 3, 2 * kTwoPi / 3}});
  const FarthestResult r = farthest_l2(t);
  const double d0 = l2_distance(t, SupportFn::segment(r.alpha_star));
  for (int k = 1; k < 3; ++k) {
    CHECK(l2_distance(t, SupportFn::segment(r.alpha_star + k * kPi / 3)) == Approx(d0).epsilon(1e-9));
  }
}

TEST_CASE("rotation equivariance") {
  for (std::uint64_t seed = 1; seed < 12; seed += 2) {
    const SupportFn c = random_class_A(seed, BodyStyle::smooth);
    const double phi = 0.3 + 0.1 * static_cast<double>(seed);
    const SupportFn rc = rotated(c, phi);
    for (auto solver : {&farthest_hausdorff, &farthest_l2}) {
      const FarthestResult a = solver(c);
      const FarthestResult b = solver(rc);
      CHECK(b.distance == Approx(a.distance).epsilon(1e-8));
      if (!a.degenerate) CHECK(circular_distance(b.alpha_star, a.alpha_star + phi, kPi) < 1e-6);
    }
  }
}

TEST_CASE("sharp inequalities") {
  const auto seg = sharp_inequality_report(SupportFn::segment(0.9));
  CHECK(std::abs(seg.max_h_minus_half_pi) < 1e-12);
  CHECK(std::abs(seg.half_pi_minus_min_plus_max) < 1e-12);
  const auto disc = sharp_inequality_report(SupportFn::disc());
  CHECK(disc.max_h_minus_half_pi == Approx(1 - kPi / 2));
  CHECK(disc.h1_norm_minus_16pi_over_3 == Approx(kTwoPi - 16 * kPi / 3));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    for (const auto& [name, v] : sharp_inequality_report(testing_bodies::body(seed)).named()) {
      INFO(name);
      CHECK(v <= 1e-6);
    }
  }
}
