#include <cmath>

#include "doctest.h"
#include "domekit/annulus.hpp"
#include "domekit/crescent.hpp"
#include "domekit/qc.hpp"

using namespace domekit;

namespace {

DilatationStats stats_of(const Fixture& f) { return dilatation_stats(beltrami_estimate(f.sample, 1)); }

}  // namespace

TEST_CASE("fixtures") {
  const Fixture identity = make_fixture("identity", 64);
  CHECK(stats_of(identity).sup_K == doctest::Approx(1.0).epsilon(1e-12));
  const BeltramiField affine = beltrami_estimate(make_fixture("affine", 64).sample, 1);
  CHECK(max_deviation(affine, 2.0) < 1e-10);
  CHECK(dilatation_stats(affine).sup_abs_mu == doctest::Approx(1.0 / 3.0).epsilon(1e-10));

  const BeltramiField reversed = beltrami_estimate(make_fixture("conjugate", 32).sample, 1);
  CHECK(reversed.count(CellFlag::OrientationReversing) == 30 * 30);
  CHECK(reversed.count(CellFlag::Valid) == 0);
  try {
    dilatation_stats(reversed);
    FAIL("expected EmptyField");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyField);
  }

  CHECK(max_deviation(beltrami_estimate(make_fixture("mobius", 128).sample, 1), 1.0) < 1e-8);
  const Fixture power = make_fixture("power", 512, 2.0);
  CHECK(power.expected_K == 2.0);
  CHECK(max_deviation(beltrami_estimate(power.sample, 2), 2.0) < 1e-4);
  CHECK_THROWS_AS(make_fixture("nope", 8), Error);
  CHECK(fixture_names().size() == 6);
}

TEST_CASE("second-order convergence") {
  const Fixture coarse = make_fixture("power", 128, 3.0);
  const Fixture fine = make_fixture("power", 255, 3.0);
  const double e1 = max_deviation(beltrami_estimate(coarse.sample, 2), 3.0);
  const double e2 = max_deviation(beltrami_estimate(fine.sample, 2), 3.0);
  CHECK(e1 / e2 > 3.5);
}

TEST_CASE("masking") {
  const GridSample s = sample_cartesian([](Complex z) { return z; }, Complex(-1.0, -1.0), 2.0, 33,
                                        [](Complex z) { return std::abs(z) > 0.3; });
  const BeltramiField f = beltrami_estimate(s, 1);
  CHECK(f.count(CellFlag::Masked) > 4 * 31);
  for (std::size_t k = 0; k < f.points.size(); ++k) {
    if (f.flags[k] == CellFlag::Valid) REQUIRE(std::abs(f.points[k]) > 0.3);
  }
}

TEST_CASE("angle scaling dilatation on a grid") {
  const ScalingReport flat = verify_scaling_dilatation(0.0, 1.0, 128, 1);
  CHECK(flat.stats.sup_K == doctest::Approx(1.0).epsilon(1e-10));
  const ScalingReport r = verify_scaling_dilatation(Complex(0.0, 2.0), kPi / 2.0, 512, 2);
  CHECK(r.analytic_K == doctest::Approx(3.0));
  CHECK(r.stats.sup_K <= 3.0 + 1e-3);
  CHECK(r.max_deviation < 1e-3);
  REQUIRE(r.kappa_L.has_value());
  CHECK(*r.kappa_L == doctest::Approx(3.0));
  const ScalingReport sheared = verify_scaling_dilatation(Complex(0.7, 0.4), 1.0, 256, 2);
  CHECK_FALSE(sheared.kappa_L.has_value());
  CHECK(sheared.max_deviation < 1e-3);
}

TEST_CASE("radial stretch of the round annulus") {
  const AnnulusExtremalReport same = annulus_extremal_check(3.0, 1.0, 128, 1);
  CHECK(same.stats.sup_K == doctest::Approx(1.0).epsilon(1e-10));
  const AnnulusExtremalReport triple = annulus_extremal_check(3.0, 3.0, 256, 2);
  CHECK(triple.target_modulus == doctest::Approx(3.0 * triple.source_modulus));
  CHECK(std::abs(triple.stats.sup_K - 3.0) < 1e-6);
  const double s = 6.0;
  const double alpha = kPi * std::sinh(0.5 * s) / s;
  const AnnulusExtremalReport to_dome = annulus_extremal_check(s, alpha, 256, 2);
  CHECK(to_dome.target_modulus == doctest::Approx(annulus_geometry(s).dome_modulus).epsilon(1e-12));
  CHECK(to_dome.required_K == doctest::Approx(annulus_geometry(s).K));
  CHECK(std::abs(to_dome.stats.sup_K - to_dome.required_K) < 1e-6 * to_dome.required_K);
}
