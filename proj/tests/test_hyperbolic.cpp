#include <cmath>
#include <random>

#include "doctest.h"
#include "domekit/hyperbolic.hpp"
#include "oracles.hpp"

using namespace domekit;

namespace {

Complex random_disk_point(std::mt19937_64& rng, double max_radius = 0.95) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(max_radius * std::sqrt(u(rng)), kTwoPi * u(rng));
}

MobiusMap random_map(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {Complex(n(rng), n(rng)), Complex(n(rng), n(rng)), Complex(n(rng), n(rng)), Complex(n(rng), n(rng))};
}

MobiusMap random_disk_map(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const MobiusMap rotation(std::polar(1.0, kPi * u(rng)), 0.0, 0.0, std::polar(1.0, -kPi * u(rng)));
  return rotation * MobiusMap::disk_automorphism(random_disk_point(rng, 0.8));
}

oracle::Mat as_matrix(const MobiusMap& m) { return {m.a(), m.b(), m.c(), m.d()}; }

}  // namespace

TEST_CASE("mobius_apply basics") {
  const ExtendedComplex z = MobiusMap::identity()(Complex(3.0, 4.0));
  CHECK(z.value() == Complex(3.0, 4.0));

  const MobiusMap inv(0.0, 1.0, 1.0, 0.0);
  CHECK(std::abs(inv(2.0).value() - 0.5) < 1e-15);
  CHECK(inv(0.0).is_infinite());
  CHECK(std::abs(inv(ExtendedComplex::infinity()).value()) < 1e-15);
  CHECK_THROWS_AS(MobiusMap(1.0, 2.0, 2.0, 4.0), Error);
}

TEST_CASE("mobius composition agrees with successive application") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 1000; ++k) {
    const MobiusMap m1 = random_map(rng), m2 = random_map(rng);
    const Complex z = random_disk_point(rng, 3.0);
    const ExtendedComplex lhs = (m1 * m2)(z);
    const ExtendedComplex rhs = m1(m2(z));
    REQUIRE(chordal_distance(lhs, rhs) < 1e-12);
    const Complex direct = oracle::apply(as_matrix(m1), oracle::apply(as_matrix(m2), z));
    REQUIRE(chordal_distance(lhs, direct) < 1e-11);
    REQUIRE(chordal_distance((m1 * m1.inverse())(z), z) < 1e-12);
  }
}

TEST_CASE("from_triples and complex_shear") {
  const std::array<ExtendedComplex, 3> from{Complex(0.2, 0.1), Complex(-1.0, 0.5), ExtendedComplex::infinity()};
  const std::array<ExtendedComplex, 3> to{Complex(0.0), Complex(1.0), Complex(0.0, 2.0)};
  const MobiusMap m = MobiusMap::from_triples(from, to);
  for (int k = 0; k < 3; ++k) CHECK(chordal_distance(m(from[k]), to[k]) < 1e-13);

  const Complex e1 = std::polar(1.0, 0.4), e2 = std::polar(1.0, 2.9);
  const Complex lambda(0.7, 0.3);
  const MobiusMap s = MobiusMap::complex_shear(e1, e2, lambda);
  const oracle::Mat o = oracle::shear(e1, e2, lambda);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const Complex z = random_disk_point(rng, 2.0);
    CHECK(chordal_distance(s(z), oracle::apply(o, z)) < 1e-12);
  }
  CHECK(MobiusMap::complex_shear(e1, e2, 0.0).is_identity(0.0));
}

TEST_CASE("dist_h2") {
  CHECK(dist_h2(PointH2(0.0), PointH2(0.0)) == 0.0);
  for (double r : {0.1, 0.5, 0.9, 0.99}) {
    const double d = dist_h2(PointH2(0.0), PointH2(r));
    CHECK(std::abs(d - std::log((1.0 + r) / (1.0 - r))) < 1e-13);
    CHECK(std::abs(d - oracle::radial_distance(r)) < 1e-8 * std::max(1.0, d));
  }
  std::mt19937_64 rng(5);
  for (int k = 0; k < 1000; ++k) {
    const Complex p = random_disk_point(rng), q = random_disk_point(rng);
    const MobiusMap m = random_disk_map(rng);
    const double d = dist_h2(p, q);
    const double moved = dist_h2(m(p).value(), m(q).value());
    REQUIRE(std::abs(d - moved) < 1e-12 * std::max(1.0, d) * 10);
    REQUIRE(std::abs(std::abs(m(std::polar(1.0, 0.1 * k)).value()) - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(PointH2(Complex(1.0 - 1e-10, 0.0)), Error);
}

TEST_CASE("triangle inequality") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 1000; ++k) {
    const Complex a = random_disk_point(rng), b = random_disk_point(rng), c = random_disk_point(rng);
    REQUIRE(dist_h2(a, c) <= dist_h2(a, b) + dist_h2(b, c) + 1e-12);
    REQUIRE(dist_h2(a, b) == doctest::Approx(dist_h2(b, a)).epsilon(1e-14));
  }
}

TEST_CASE("geodesic_distance") {
  const GeodesicH2 g(0.0, kPi);
  CHECK(geodesic_distance(g, g).distance == 0.0);
  CHECK(geodesic_distance(GeodesicH2(0.0, kPi), GeodesicH2(0.0, 0.5 * kPi)).distance == 0.0);
  CHECK_THROWS_AS(geodesic_distance(GeodesicH2(0.0, 2.0), GeodesicH2(1.0, 3.0)), Error);

  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  while (checked < 20) {
    const GeodesicH2 a(kTwoPi * u(rng), kTwoPi * u(rng)), b(kTwoPi * u(rng), kTwoPi * u(rng));
    if (leaves_cross(a, b) || leaves_asymptotic(a, b)) continue;
    const GeodesicSeparation sep = geodesic_distance(a, b);
    if (sep.distance > 4.0) continue;
    ++checked;
    // Sample both leaves by arclength about their midpoints and minimize.
    auto sample = [](const GeodesicH2& g, double s) {
      const MobiusMap to_disk = half_plane_chart(g).inverse();
      const MobiusMap chart = half_plane_chart(g);
      const Complex m = chart(g.midpoint()).value();
      return to_disk(m * std::exp(s)).value();
    };
    double best = 1e300;
    double sa_best = 0.0, sb_best = 0.0;
    for (int i = -300; i <= 300; ++i) {
      for (int j = -300; j <= 300; ++j) {
        const double d = dist_h2(sample(a, 0.02 * i), sample(b, 0.02 * j));
        if (d < best) {
          best = d;
          sa_best = 0.02 * i;
          sb_best = 0.02 * j;
        }
      }
    }
    for (double step = 0.01; step > 1e-9; step *= 0.5) {
      for (int rep = 0; rep < 4; ++rep) {
        for (int di = -1; di <= 1; ++di) {
          for (int dj = -1; dj <= 1; ++dj) {
            const double d = dist_h2(sample(a, sa_best + di * step), sample(b, sb_best + dj * step));
            if (d < best) {
              best = d;
              sa_best += di * step;
              sb_best += dj * step;
            }
          }
        }
      }
    }
    CHECK(std::abs(best - sep.distance) < 1e-6);
    CHECK(dist_h2(sep.foot_first, sep.foot_second) == doctest::Approx(sep.distance).epsilon(1e-9));
  }
}

TEST_CASE("poincare_extension") {
  const PointH3 p(0.3, -0.2, 0.7);
  const PointH3 same = poincare_extension(MobiusMap::identity(), p);
  CHECK(same.x() == p.x());
  CHECK(same.t() == p.t());
  const PointH3 up = poincare_extension(MobiusMap(2.0, 0.0, 0.0, 1.0), PointH3(0.0, 0.0, 1.0));
  CHECK(std::abs(up.t() - 2.0) < 1e-14);
  CHECK(std::abs(up.z()) < 1e-14);

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const MobiusMap m = random_map(rng);
    const PointH3 a(u(rng), u(rng), 0.1 + std::abs(u(rng)));
    const PointH3 b(u(rng), u(rng), 0.1 + std::abs(u(rng)));
    const PointH3 ma = poincare_extension(m, a), mb = poincare_extension(m, b);
    const double d = dist_h3(a, b);
    REQUIRE(std::abs(dist_h3(ma, mb) - d) < 1e-12 * std::max(1.0, d) * 100);
    const oracle::V3 q = oracle::extend(as_matrix(m), {a.x(), a.y(), a.t()});
    REQUIRE(oracle::dist_h3(q, {ma.x(), ma.y(), ma.t()}) < 1e-9);
  }
}

TEST_CASE("ball and hemisphere conversions") {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 200; ++k) {
    const Complex z = random_disk_point(rng);
    const PointH3 h = disk_to_hemisphere(z);
    const oracle::V3 o = oracle::hemisphere(z);
    CHECK(std::abs(h.x() - o[0]) + std::abs(h.y() - o[1]) + std::abs(h.t() - o[2]) < 1e-14);
    CHECK(std::abs(hemisphere_to_disk(h) - z) < 1e-13);
    const PointH3 back = PointH3::from_ball(h.to_ball());
    CHECK(dist_h3(back, h) < 1e-10);
  }
  const Vec3 s = to_sphere(ExtendedComplex::infinity());
  CHECK(s[2] == doctest::Approx(1.0));
  CHECK(std::abs(from_sphere(to_sphere(Complex(0.3, -2.0))).value() - Complex(0.3, -2.0)) < 1e-12);
}

TEST_CASE("busemann") {
  const PointH3 base(0.0, 0.0, 1.0);
  CHECK(busemann(ExtendedComplex::infinity(), base, base) == 0.0);
  for (double t : {0.1, 0.5, 2.0, 7.0}) {
    CHECK(busemann(ExtendedComplex::infinity(), PointH3(0.4, 0.1, t), base) == doctest::Approx(-std::log(t)));
  }
  // Monotone along the ray toward xi, equal on a horosphere.
  const Complex xi(0.3, -0.4);
  // The geodesic through base and xi is a semicircle in the vertical plane over
  // the line through 0 and xi.
  const double r = std::abs(xi);
  const double c = (r * r - 1.0) / (2.0 * r);
  const double radius = r - c;
  const double phi0 = std::acos(-c / radius);
  double previous = busemann(xi, base, base);
  for (int k = 1; k <= 100; ++k) {
    const double phi = phi0 * (1.0 - 0.0099 * k);
    const PointH3 p((c + radius * std::cos(phi)) * xi / r, radius * std::sin(phi));
    const double value = busemann(xi, p, base);
    REQUIRE(value < previous);
    previous = value;
  }
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double height = 0.8;  // horosphere at xi of Euclidean diameter 0.8
  const double level = busemann(xi, PointH3(xi, height), base);
  for (int k = 0; k < 100; ++k) {
    const double a = kTwoPi * u(rng), b = kPi * u(rng);
    const double r = 0.5 * height;
    const PointH3 p(xi.real() + r * std::sin(b) * std::cos(a), xi.imag() + r * std::sin(b) * std::sin(a),
                    r + r * std::cos(b) + 1e-300);
    if (p.t() < 1e-6) continue;
    REQUIRE(std::abs(busemann(xi, p, base) - level) < 1e-10);
  }
}
