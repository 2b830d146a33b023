#include "domekit/lamination.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace domekit {

FiniteLamination::FiniteLamination(std::vector<GeodesicH2> leaves, std::vector<double> weights)
    : leaves_(std::move(leaves)), weights_(std::move(weights)) {
  if (leaves_.size() != weights_.size()) {
    throw Error(ErrorCode::ParseError, "lamination needs one weight per leaf");
  }
}

int leaf_side(const GeodesicH2& leaf, const GeodesicH2& reference) {
  const int s1 = reference.arc_side(leaf.first().angle());
  const int s2 = reference.arc_side(leaf.second().angle());
  return s1 != 0 ? s1 : s2;
}

bool separates(const GeodesicH2& middle, const GeodesicH2& a, const GeodesicH2& b) {
  const int sa = leaf_side(a, middle);
  const int sb = leaf_side(b, middle);
  return sa != 0 && sb != 0 && sa != sb;
}

void validate(const FiniteLamination& lamination) {
  const std::size_t n = lamination.size();
  if (n > kMaxLeaves) {
    throw Error(ErrorCode::TooManyLeaves,
                "at most " + std::to_string(kMaxLeaves) + " leaves supported, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double w = lamination.weight(i);
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::NonpositiveWeight, "leaf " + std::to_string(i) + " has weight " + std::to_string(w));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const GeodesicH2& a = lamination.leaf(i);
      const GeodesicH2& b = lamination.leaf(j);
      if (leaves_cross(a, b) || leaf_side(a, b) == 0) {
        throw Error(ErrorCode::CrossingLeaves, "leaves " + std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
}

GeodesicArc::GeodesicArc(PointH2 start, PointH2 end) : start_(start), end_(end) {
  if (start.z() == end.z()) throw Error(ErrorCode::InvalidPoint, "arc endpoints must differ");
}

double transverse_measure(const FiniteLamination& lamination, const GeodesicArc& arc) {
  double total = 0.0;
  for (std::size_t i = 0; i < lamination.size(); ++i) {
    const double a = signed_distance(lamination.leaf(i), arc.start().z());
    const double b = signed_distance(lamination.leaf(i), arc.end().z());
    if (std::abs(a) < kOnLeafTolerance || std::abs(b) < kOnLeafTolerance) {
      throw Error(ErrorCode::NotTransverse, "arc endpoint lies on leaf " + std::to_string(i));
    }
    if ((a < 0.0) != (b < 0.0)) total += lamination.weight(i);
  }
  return total;
}

RoundnessWitness roundness_witness(const FiniteLamination& lamination) {
  validate(lamination);
  const std::size_t n = lamination.size();
  RoundnessWitness best;
  for (std::size_t i = 0; i < n; ++i) {
    if (lamination.weight(i) > best.value) {
      best.value = lamination.weight(i);
      best.chain = {i};
    }
  }
  // A set crossed by one arc is linearly ordered by separation; its extreme
  // leaves i, j fix it as {i, j} plus everything separating them, and the
  // shortest crossing arc has the length of their common perpendicular.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const GeodesicH2& a = lamination.leaf(i);
      const GeodesicH2& b = lamination.leaf(j);
      if (geodesic_distance(a, b).distance >= 1.0) continue;
      std::vector<std::size_t> chain{i};
      double total = lamination.weight(i) + lamination.weight(j);
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (separates(lamination.leaf(k), a, b)) {
          total += lamination.weight(k);
          chain.push_back(k);
        }
      }
      chain.push_back(j);
      if (total > best.value) {
        // Order the interior by how many chain members separate them from a.
        auto depth = [&](std::size_t k) {
          std::size_t d = 0;
          for (std::size_t m : chain) {
            if (m != k && m != i && separates(lamination.leaf(m), a, lamination.leaf(k))) ++d;
          }
          return d;
        };
        std::stable_sort(chain.begin() + 1, chain.end() - 1,
                         [&](std::size_t x, std::size_t y) { return depth(x) < depth(y); });
        best.value = total;
        best.chain = std::move(chain);
      }
    }
  }
  return best;
}

double roundness(const FiniteLamination& lamination) { return roundness_witness(lamination).value; }

double sampled_roundness(const FiniteLamination& lamination, std::size_t samples, std::uint64_t seed,
                         double radius) {
  validate(lamination);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double cosh_r = std::cosh(radius);
  double best = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double rho = std::acosh(1.0 + unit(rng) * (cosh_r - 1.0));
    const Complex start = std::polar(std::tanh(0.5 * rho), kTwoPi * unit(rng));
    const Complex end = disk_exp(start, kTwoPi * unit(rng), 1.0);
    double total = 0.0;
    for (std::size_t i = 0; i < lamination.size(); ++i) {
      const double a = signed_distance(lamination.leaf(i), start);
      const double b = signed_distance(lamination.leaf(i), end);
      if ((a < 0.0) != (b < 0.0)) total += lamination.weight(i);
    }
    best = std::max(best, total);
  }
  return best;
}

FiniteLamination scale(const FiniteLamination& lamination, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw Error(ErrorCode::NonpositiveScale, "scale factor must be positive");
  std::vector<double> weights = lamination.weights();
  for (double& w : weights) w *= c;
  return {lamination.leaves(), std::move(weights)};
}

OrientedPushforward pushforward_oriented(const CircleMap& map, const FiniteLamination& lamination) {
  std::vector<GeodesicH2> leaves;
  leaves.reserve(lamination.size());
  std::uint64_t flipped = 0;
  for (std::size_t i = 0; i < lamination.size(); ++i) {
    const GeodesicH2& leaf = lamination.leaf(i);
    const double a = wrap_angle(map(leaf.first().angle()));
    const double b = wrap_angle(map(leaf.second().angle()));
    GeodesicH2 image{BoundaryPointH2(a), BoundaryPointH2(b)};
    if (image.first().angle() != a) flipped |= (std::uint64_t{1} << i);
    leaves.push_back(image);
  }
  OrientedPushforward result{FiniteLamination(std::move(leaves), lamination.weights()), flipped};
  validate(result.lamination);
  return result;
}

FiniteLamination pushforward(const CircleMap& map, const FiniteLamination& lamination) {
  return pushforward_oriented(map, lamination).lamination;
}

}  // namespace domekit
