#include <cmath>
#include <random>

#include "doctest.h"
#include "domekit/lamination.hpp"
#include "domekit/pleating.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace domekit;

namespace {

FiniteLamination two_leaves(double separation, double w1, double w2) {
  const oracle::Leaf a = oracle::leaf_at(0.5 * separation, 0.0);
  const oracle::Leaf b = oracle::leaf_at(0.5 * separation, kPi);
  return {{GeodesicH2(a.a, a.b), GeodesicH2(b.a, b.b)}, {w1, w2}};
}

// A nested family: leaf k cuts off the arc [pi - h_k, pi + h_k] with h_k shrinking.
FiniteLamination nested(std::size_t n) {
  std::vector<GeodesicH2> leaves;
  std::vector<double> weights;
  for (std::size_t k = 0; k < n; ++k) {
    const double h = 3.0 * std::pow(0.9, static_cast<double>(k));
    leaves.emplace_back(kPi - h, kPi + h);
    weights.push_back(1.0 + 0.01 * static_cast<double>(k));
  }
  return {leaves, weights};
}

}  // namespace

TEST_CASE("validate") {
  CHECK_NOTHROW(validate(FiniteLamination{}));
  CHECK_THROWS_AS(validate(FiniteLamination({GeodesicH2(0.0, 2.0), GeodesicH2(1.0, 3.0)}, {1.0, 1.0})), Error);
  try {
    validate(FiniteLamination({GeodesicH2(0.0, 2.0), GeodesicH2(1.0, 3.0)}, {1.0, 1.0}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CrossingLeaves);
  }
  try {
    validate(FiniteLamination({GeodesicH2(0.0, 2.0)}, {0.0}));
    FAIL("expected NonpositiveWeight");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonpositiveWeight);
  }
  const FiniteLamination family = nested(50);
  CHECK_NOTHROW(validate(family));
  // The validator agrees with an O(n^2) interleaving oracle.
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const oracle::Leaf a(family.leaf(i).first().angle(), family.leaf(i).second().angle());
      const oracle::Leaf b(family.leaf(j).first().angle(), family.leaf(j).second().angle());
      CHECK_FALSE(oracle::interleave(a, b));
    }
  }
  std::vector<GeodesicH2> many(65, GeodesicH2(0.0, 1.0));
  try {
    validate(FiniteLamination(many, std::vector<double>(65, 1.0)));
    FAIL("expected TooManyLeaves");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooManyLeaves);
  }
}

TEST_CASE("transverse_measure") {
  const FiniteLamination lam = two_leaves(1.0, 2.0, 3.0);
  CHECK(transverse_measure(lam, GeodesicArc(PointH2(Complex(0.0, 0.1)), PointH2(Complex(0.0, 0.5)))) == 0.0);
  CHECK(transverse_measure(lam, GeodesicArc(PointH2(0.0), PointH2(0.9))) == 2.0);
  CHECK(transverse_measure(lam, GeodesicArc(PointH2(-0.9), PointH2(0.9))) == 5.0);
  const Complex on_leaf = std::tanh(0.25);
  try {
    transverse_measure(lam, GeodesicArc(PointH2(on_leaf), PointH2(0.0)));
    FAIL("expected NotTransverse");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTransverse);
  }

  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const testgen::RandomLamination random = testgen::random_lamination(rng, 10, 1.5, 0.5, 2.0);
  const FiniteLamination ten = random.lamination();
  for (int k = 0; k < 1000; ++k) {
    const Complex p = std::polar(0.9 * std::sqrt(u(rng)), kTwoPi * u(rng));
    const Complex q = std::polar(0.9 * std::sqrt(u(rng)), kTwoPi * u(rng));
    double expected = 0.0;
    for (std::size_t i = 0; i < random.leaves.size(); ++i) {
      if (random.leaves[i].crossed_by(p, q)) expected += random.weights[i];
    }
    REQUIRE(transverse_measure(ten, GeodesicArc(PointH2(p), PointH2(q))) == doctest::Approx(expected));
  }
}

TEST_CASE("roundness examples") {
  CHECK(roundness(FiniteLamination({GeodesicH2(0.2, 2.5)}, {1.75})) == 1.75);
  CHECK(roundness(two_leaves(1.5, 2.0, 3.0)) == 3.0);
  CHECK(roundness(two_leaves(0.4, 2.0, 3.0)) == 5.0);
  CHECK(oracle::brute_force_roundness({oracle::leaf_at(0.75, 0.0), oracle::leaf_at(0.75, kPi)}, {2.0, 3.0},
                                      1000000, 1, 2.0) == 3.0);
  CHECK(oracle::brute_force_roundness({oracle::leaf_at(0.2, 0.0), oracle::leaf_at(0.2, kPi)}, {2.0, 3.0},
                                      1000000, 1, 2.0) == 5.0);
  // Asymptotic leaves share an endpoint and are always co-crossable.
  CHECK(roundness(FiniteLamination({GeodesicH2(0.0, 1.0), GeodesicH2(1.0, 4.0)}, {1.0, 2.0})) == 3.0);
  const RoundnessWitness witness = roundness_witness(nested(6));
  CHECK(witness.chain.size() >= 2);
}

TEST_CASE("scale") {
  const FiniteLamination lam = two_leaves(0.4, 2.0, 3.0);
  const FiniteLamination same = scale(lam, 1.0);
  CHECK(same.weights() == lam.weights());
  CHECK(roundness(scale(lam, 2.0)) == 10.0);
  CHECK(std::abs(roundness(scale(lam, 1.0 / roundness(lam))) - 1.0) < 1e-12);
  try {
    scale(lam, 0.0);
    FAIL("expected NonpositiveScale");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonpositiveScale);
  }
}

TEST_CASE("roundness is conformally invariant and bounds every arc") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const FiniteLamination lam = testgen::random_lamination(rng, 6, 1.2, 0.2, 2.0).lamination();
    const double r = roundness(lam);
    const MobiusMap m = MobiusMap::disk_automorphism(std::polar(0.6 * u(rng), kTwoPi * u(rng)));
    const FiniteLamination moved =
        pushforward([&](double a) { return std::arg(m(std::polar(1.0, a)).value()); }, lam);
    CHECK(std::abs(roundness(moved) - r) < 1e-9);
    for (int k = 0; k < 5000; ++k) {
      const Complex p = std::polar(std::tanh(0.5 * 2.5 * std::sqrt(u(rng))), kTwoPi * u(rng));
      const Complex q = disk_exp(p, kTwoPi * u(rng), 1.0);
      REQUIRE(transverse_measure(lam, GeodesicArc(PointH2(p), PointH2(q))) <= r + 1e-9);
    }
  }
}

TEST_CASE("pushforward") {
  const FiniteLamination lam = two_leaves(0.7, 1.0, 2.0);
  const FiniteLamination same = pushforward([](double a) { return a; }, lam);
  for (std::size_t i = 0; i < lam.size(); ++i) {
    CHECK(same.leaf(i).first().angle() == lam.leaf(i).first().angle());
    CHECK(same.weight(i) == lam.weight(i));
  }
  const MobiusMap m = MobiusMap::disk_automorphism(Complex(0.3, 0.2));
  const FiniteLamination moved = pushforward([&](double a) { return std::arg(m(std::polar(1.0, a)).value()); }, lam);
  for (std::size_t i = 0; i < lam.size(); ++i) {
    const Complex e = m(lam.leaf(i).first().z()).value();
    const double d1 = std::abs(moved.leaf(i).first().z() - e);
    const double d2 = std::abs(moved.leaf(i).second().z() - e);
    CHECK(std::min(d1, d2) < 1e-12);
  }

  // Single-leaf earthquake moving a disjoint leaf: compare with the
  // piecewise Mobius map evaluated directly.
  const GeodesicH2 fault(1.0, 2.5);
  const FiniteLamination quake_lam({fault}, {0.8});
  const EarthquakeMap quake = earthquake(quake_lam, GapStructure(quake_lam).gap_of_point(0.0));
  const FiniteLamination other({GeodesicH2(1.3, 2.0), GeodesicH2(3.5, 5.0)}, {1.0, 1.0});
  const FiniteLamination image = pushforward(boundary_map(quake), other);
  const oracle::Leaf f(1.0, 2.5);
  const int base_side = f.side(0.0);
  const oracle::Mat far = oracle::shear(f.u, f.v, -base_side * 0.8);
  for (std::size_t i = 0; i < other.size(); ++i) {
    for (const BoundaryPointH2& end : {other.leaf(i).first(), other.leaf(i).second()}) {
      const bool moves = f.side(0.999 * end.z()) != base_side;
      const Complex expected = moves ? oracle::apply(far, end.z()) : end.z();
      const double d = std::min(std::abs(image.leaf(i).first().z() - expected),
                                std::abs(image.leaf(i).second().z() - expected));
      CHECK(d < 1e-12);
    }
  }
}
