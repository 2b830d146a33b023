#include <cmath>

#include "doctest.h"
#include "domekit/annulus.hpp"
#include "domekit/bounds.hpp"
#include "domekit/hyperbolic.hpp"

using namespace domekit;

TEST_CASE("closed forms") {
  const AnnulusGeometry a = annulus_geometry(2.0 * std::asinh(kPi));
  CHECK(a.nu_hat == doctest::Approx(1.0).epsilon(1e-15));
  const AnnulusGeometry b = annulus_geometry(2.0 * kPi * kPi);
  CHECK(b.nu == doctest::Approx(0.5).epsilon(1e-15));
  for (int k = 0; k < 500; ++k) {
    const double s = 0.1 + (60.0 - 0.1) * k / 499.0;
    const AnnulusGeometry g = annulus_geometry(s);
    REQUIRE(std::abs(g.K * g.modulus - g.dome_modulus) <= 1e-14 * g.dome_modulus);
    REQUIRE(std::abs(g.nu - 0.5 * g.core_length) <= 1e-15 * g.nu);
    REQUIRE(std::abs(g.nu_hat - 0.5 * g.dome_core_length) <= 1e-15 * g.nu_hat);
    REQUIRE(std::abs(std::log(g.outer_radius) - s) <= 1e-14 * s);
    // The round annulus attains the upper modulus bound.
    REQUIRE(std::abs(modulus_bounds(g.core_length).upper - g.modulus) <= 1e-14 * g.modulus);
  }
  try {
    annulus_geometry(0.0);
    FAIL("expected NonpositiveModulusParameter");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonpositiveModulusParameter);
  }
}

TEST_CASE("bound verdicts") {
  for (int k = 0; k < 500; ++k) {
    const double s = 0.1 + (60.0 - 0.1) * k / 499.0;
    const AnnulusVerdict v = verify_bounds(s);
    REQUIRE(v.all());
    REQUIRE(v.lower.has_value() == (s > 2.0 * kPi * kPi));
  }
  const AnnulusVerdict at25 = verify_bounds(25.0);
  REQUIRE(at25.lower.has_value());
  CHECK(*at25.lower <= at25.K);
  CHECK(annulus_geometry(25.0).nu == doctest::Approx(0.3948).epsilon(1e-3));
  const AnnulusVerdict tiny = verify_bounds(1e-6);
  CHECK(tiny.K == doctest::Approx(kPi / 2.0).epsilon(1e-9));
  CHECK(std::isfinite(tiny.M));
  CHECK(tiny.all());
}

TEST_CASE("asymptotic ratios") {
  const AsymptoticRatios r = asymptotic_ratios(40.0);
  CHECK(std::abs(r.r1 - 1.0) < 0.01);
  REQUIRE(r.r2.has_value());
  // Closed form of the second ratio.
  CHECK(*r.r2 == doctest::Approx(2.0 * std::log(std::sinh(20.0) / kPi) / 40.0).epsilon(1e-12));
  for (double s : {0.5, 3.0, 20.0}) {
    const AnnulusGeometry g = annulus_geometry(s);
    const double literal = g.K * 2.0 * kPi / (g.nu * std::exp(kPi * kPi / (2.0 * g.nu)));
    CHECK(asymptotic_ratios(s).r1 == doctest::Approx(literal).epsilon(1e-13));
  }
  double previous1 = 1e300, previous2 = 1e300;
  for (int k = 0; k <= 400; ++k) {
    const double s = 20.0 + 40.0 * k / 400.0;
    const AsymptoticRatios r = asymptotic_ratios(s);
    REQUIRE(std::abs(r.r1 - 1.0) <= previous1);
    REQUIRE(std::abs(*r.r2 - 1.0) < previous2);
    previous1 = std::abs(r.r1 - 1.0);
    previous2 = std::abs(*r.r2 - 1.0);
  }
  CHECK_FALSE(asymptotic_ratios(1.0).r2.has_value());
}
