#include <cmath>

#include "bodies.hpp"
#include "doctest.h"
#include "oracle.hpp"
#include "shapes/support_fn.hpp"
#include "shapes/weingarten.hpp"

using namespace shapes;
using doctest::Approx;

namespace {

SupportFn sampled(const std::function<double(double)>& f, int n) {
  std::vector<double> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = f(kTwoPi * i / n);
  return SupportFn::grid(std::move(s));
}

}  // namespace

TEST_CASE("evaluate") {
  CHECK(evaluate(SupportFn::segment(0.0), kPi / 2) == Approx(kPi / 2).epsilon(1e-15));
  CHECK(evaluate(SupportFn::disc(), 2.3) == 1.0);
  CHECK(std::abs(evaluate(SupportFn::segment(kPi / 4), kPi / 4)) < 1e-15);
  // Angles are reduced mod 2π.
  const SupportFn f = SupportFn::fourier(1.0, {{2, 0.1, 0.05}});
  CHECK(f.value(1.0 + 6 * kPi) == Approx(f.value(1.0)).epsilon(1e-13));
}

TEST_CASE("grid interpolation is linear between nodes") {
  const SupportFn g = SupportFn::grid({1.0, 2.0, 3.0, 2.0, 1.0, 2.0, 3.0, 2.0});
  CHECK(g.value(kPi / 8) == Approx(1.5));
  CHECK(g.value(15 * kPi / 8) == Approx(1.5));
}

TEST_CASE("perimeter") {
  for (double a : {0.0, 0.7, 2.0, 5.5}) CHECK(perimeter(SupportFn::segment(a)) == Approx(kTwoPi).epsilon(1e-13));
  CHECK(perimeter(SupportFn::disc()) == Approx(kTwoPi).epsilon(1e-15));
  const SupportFn eq = polygon_support({0.0, kTwoPi / 3, 2 * kTwoPi / 3}, {kTwoPi / 3, kTwoPi / 3, kTwoPi / 3});
  CHECK(perimeter(eq) == Approx(kTwoPi).epsilon(1e-13));
}

TEST_CASE("steiner point") {
  CHECK(steiner(SupportFn::segment(1.1)).norm() < 1e-12);
  const auto s = steiner(SupportFn::fourier(1.0, {{1, 0.3, 0.0}}));
  CHECK(s.x() == Approx(0.3));
  CHECK(std::abs(s.y()) < 1e-15);
  const SupportFn g = sampled([](double t) { return 1.0 + 0.1 * std::cos(2 * t); }, 720);
  CHECK(steiner(g).norm() < 1e-9);
}

TEST_CASE("steiner equivariance under translation") {
  const Eigen::Vector2d v(0.3, -0.7);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SupportFn h = testing_bodies::body(seed);
    const auto moved = steiner(translated(h, v));
    CHECK((moved - steiner(h) - v).norm() < 1e-9);
  }
}

TEST_CASE("normalize_to_class_A") {
  const SupportFn big = normalize_to_class_A(SupportFn::disc(2.0));
  CHECK(big.value(0.4) == Approx(1.0));
  const SupportFn shifted = normalize_to_class_A(SupportFn::fourier(1.0, {{1, 0.3, 0.0}}));
  CHECK(steiner(shifted).norm() < 1e-14);
  CHECK(perimeter(shifted) == Approx(kTwoPi));
  const SupportFn seg = normalize_to_class_A(SupportFn::segment(0.4));
  for (double t = 0; t < kTwoPi; t += 0.1) CHECK(seg.value(t) == Approx(SupportFn::segment(0.4).value(t)));
  CHECK_THROWS_AS(normalize_to_class_A(SupportFn::fourier(0.0)), ShapeError);
}

TEST_CASE("min_max_h") {
  const MinMax s = min_max_h(SupportFn::segment(0.0));
  CHECK(std::abs(s.min) < 1e-15);
  CHECK(s.max == Approx(kPi / 2).epsilon(1e-14));
  CHECK(s.argmin == 0.0);
  CHECK(s.argmax == Approx(kPi / 2).epsilon(1e-12));

  const MinMax d = min_max_h(SupportFn::disc());
  CHECK(d.min == 1.0);
  CHECK(d.max == 1.0);
  CHECK(d.argmin == 0.0);
  CHECK(d.argmax == 0.0);

  // Thin rectangle of width α and height π − α (perimeter 2π).
  const double a = 0.1;
  const SupportFn rect = polygon_support({0.0, kPi / 2, kPi, 3 * kPi / 2}, {kPi - a, a, kPi - a, a});
  const MinMax r = min_max_h(rect);
  CHECK(r.min == Approx(a / 2).epsilon(1e-12));
  CHECK(r.max == Approx(std::sqrt(a * a + (kPi - a) * (kPi - a)) / 2).epsilon(1e-12));
  CHECK(r.max == Approx(1.5216).epsilon(1e-4));
  CHECK(r.max == Approx(oracle::sup([&](double t) { return rect.value(t); }, 0, kTwoPi)).epsilon(1e-9));
}

TEST_CASE("min_max_h locates smooth maxima to 1e-9") {
  const SupportFn f = SupportFn::fourier(1.0, {{2, -0.1, 0.0}, {3, 0.05, 0.0}});
  const MinMax m = min_max_h(f);
  // h'(θ) = 0.2 sin 2θ − 0.15 sin 3θ, bracketed from the scan and bisected.
  const auto dh = [](double t) { return 0.2 * std::sin(2 * t) - 0.15 * std::sin(3 * t); };
  double lo = m.argmax - 1e-3, hi = m.argmax + 1e-3;
  REQUIRE(dh(lo) * dh(hi) < 0);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (dh(lo) * dh(mid) <= 0 ? hi : lo) = mid;
  }
  CHECK(std::abs(m.argmax - 0.5 * (lo + hi)) < 1e-9);
  CHECK(m.argmax < kPi);  // tie with 2π − θ resolved to the smaller angle
}

TEST_CASE("hausdorff_distance") {
  CHECK(hausdorff_distance(SupportFn::segment(0.0), SupportFn::segment(kPi / 2)) == Approx(kPi / 2).epsilon(1e-12));
  const SupportFn h = testing_bodies::body(5);
  CHECK(hausdorff_distance(h, h) == 0.0);
  for (double a : {0.0, 0.3, 2.0}) {
    CHECK(hausdorff_distance(SupportFn::disc(), SupportFn::segment(a)) == Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("hausdorff_distance against a dense scan") {
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    const SupportFn a = testing_bodies::body(seed);
    const SupportFn b = testing_bodies::body(seed + 100);
    const auto gap = [&](double t) { return std::abs(a.value(t) - b.value(t)); };
    double ref = oracle::sup(gap, 0, kTwoPi, 400000);
    for (const auto* s : {&a, &b}) {
      for (double k : s->kinks()) ref = std::max(ref, gap(k));
    }
    const double d = hausdorff_distance(a, b);
    CHECK(d >= ref - 1e-12);
    CHECK(d <= ref + 1e-7);
    const ScanCache ca = scan_cache(a, 2048), cb = scan_cache(b, 2048);
    CHECK(hausdorff_distance(ca, cb) == Approx(d).epsilon(1e-12));
  }
}

TEST_CASE("l2_distance") {
  const SupportFn h = testing_bodies::body(9);
  CHECK(l2_distance(h, h) == 0.0);
  const double expected = std::sqrt(kPi * kPi * kPi / 4 - kTwoPi);
  for (double a : {0.0, 1.0, 2.5}) {
    CHECK(l2_distance(SupportFn::disc(), SupportFn::segment(a)) == Approx(expected).epsilon(1e-12));
  }
  const SupportFn odd = SupportFn::fourier(1.0, {{3, 0.05, 0.02}, {5, 0.01, 0.0}});
  const double d0 = l2_distance(odd, SupportFn::segment(0.0));
  for (double a : {0.4, 1.3, 2.9}) CHECK(l2_distance(odd, SupportFn::segment(a)) == Approx(d0).epsilon(1e-12));
}

TEST_CASE("l2_distance against midpoint quadrature") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const SupportFn a = testing_bodies::body(seed);
    const SupportFn b = testing_bodies::body(seed + 7);
    const double ref = std::sqrt(oracle::integrate(
        [&](double t) {
          const double d = a.value(t) - b.value(t);
          return d * d;
        },
        0, kTwoPi));
    CHECK(l2_distance(a, b) == Approx(ref).epsilon(1e-6));
  }
}

TEST_CASE("metric axioms on random triples") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SupportFn x = testing_bodies::body(3 * seed);
    const SupportFn y = testing_bodies::body(3 * seed + 1);
    const SupportFn z = testing_bodies::body(3 * seed + 2);
    CHECK(std::abs(hausdorff_distance(x, y) - hausdorff_distance(y, x)) <= 1e-9);
    CHECK(std::abs(l2_distance(x, y) - l2_distance(y, x)) <= 1e-9);
    CHECK(hausdorff_distance(x, z) <= hausdorff_distance(x, y) + hausdorff_distance(y, z) + 1e-9);
    CHECK(l2_distance(x, z) <= l2_distance(x, y) + l2_distance(y, z) + 1e-9);
  }
}

TEST_CASE("boundary_points") {
  // Grids need n ≥ 8; the quarter-turn nodes are every second point.
  const auto disc = boundary_points(SupportFn::disc(), AngleGrid(8));
  REQUIRE(disc.size() == 8);
  const Eigen::Vector2d expect[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int i = 0; i < 4; ++i) CHECK((disc[static_cast<std::size_t>(2 * i)] - expect[i]).norm() < 1e-15);

  const auto seg = boundary_points(SupportFn::segment(0.0), AngleGrid(8));
  for (const auto& p : seg) {
    CHECK(std::abs(p.x()) < 1e-12);
    CHECK(std::abs(std::abs(p.y()) - kPi / 2) < 1e-12);
  }

  // Equilateral triangle: vertices from intersecting adjacent support lines.
  const SupportFn tri = triangle_support(TriangleSpec{{0.0, kTwoPi / 3, 2 * kTwoPi / 3}});
  const double circumradius = (kTwoPi / 3) / std::sqrt(3.0);
  for (const auto& p : boundary_points(tri, AngleGrid(720))) CHECK(p.norm() == Approx(circumradius).epsilon(1e-12));
}

TEST_CASE("perimeter is linear under Minkowski combination") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SupportFn a = testing_bodies::body(seed);
    const SupportFn b = SupportFn::fourier(1.5, {{2, 0.1, 0.0}});
    const double t = 0.3;
    const SupportFn m = SupportFn::minkowski({{t, a}, {1 - t, b}});
    CHECK(perimeter(m) == Approx(t * perimeter(a) + (1 - t) * perimeter(b)).epsilon(1e-12));
  }
}

TEST_CASE("rotation") {
  const SupportFn h = testing_bodies::body(3);
  const SupportFn r = rotated(h, 0.8);
  for (double t = 0; t < kTwoPi; t += 0.37) CHECK(r.value(t) == Approx(h.value(t - 0.8)).epsilon(1e-12));
}

TEST_CASE("convexity") {
  CHECK(convexity(SupportFn::segment(0.2)).convex);
  CHECK(convexity(SupportFn::fourier(1.0, {{2, 0.3, 0.0}})).convex);
  CHECK_FALSE(convexity(SupportFn::fourier(1.0, {{2, 0.4, 0.0}})).convex);
  CHECK_FALSE(convexity(SupportFn::grid({1, 0.2, 1, 0.2, 1, 0.2, 1, 0.2})).convex);
}

TEST_CASE("random bodies satisfy the class invariants") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const SupportFn h = testing_bodies::body(seed);
    const auto r = class_a_residuals(h);
    const double tol = class_a_tolerance(h);
    CHECK(r.perimeter_error <= tol);
    CHECK(r.steiner_norm <= tol);
    CHECK(convexity(h).convex);
  }
  CHECK(random_class_A(11, BodyStyle::atoms, 2).as<SegmentForm>() != nullptr);
  const SupportFn tri = random_class_A(12, BodyStyle::atoms, 3);
  CHECK(perimeter(tri) == Approx(kTwoPi).epsilon(1e-12));
  for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(min_max_h(random_class_A(seed, BodyStyle::smooth)).min > 0.0);
}

TEST_CASE("random bodies are reproducible") {
  const SupportFn a = random_class_A(77, BodyStyle::mixed, 4);
  const SupportFn b = random_class_A(77, BodyStyle::mixed, 4);
  for (double t = 0; t < kTwoPi; t += 0.1) CHECK(a.value(t) == b.value(t));
}
