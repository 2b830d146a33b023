#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "domekit/hyperbolic.hpp"

namespace domekit {

inline constexpr std::size_t kMaxLeaves = 64;
// Arc endpoints within this hyperbolic distance of a leaf count as lying on it.
inline constexpr double kOnLeafTolerance = 1e-9;

/// Finitely many pairwise disjoint geodesics of the disk with positive
/// weights: an atomic measured lamination.
class FiniteLamination {
 public:
  FiniteLamination() = default;
  /// Sizes must agree; geometric validity is checked by validate().
  FiniteLamination(std::vector<GeodesicH2> leaves, std::vector<double> weights);

  std::size_t size() const noexcept { return leaves_.size(); }
  bool empty() const noexcept { return leaves_.empty(); }
  const std::vector<GeodesicH2>& leaves() const noexcept { return leaves_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const GeodesicH2& leaf(std::size_t i) const { return leaves_.at(i); }
  double weight(std::size_t i) const { return weights_.at(i); }

 private:
  std::vector<GeodesicH2> leaves_;
  std::vector<double> weights_;
};

/// Throws CrossingLeaves(i, j) for interleaving or duplicated leaves,
/// NonpositiveWeight(i), or TooManyLeaves beyond kMaxLeaves.
void validate(const FiniteLamination& lamination);

/// Side of leaf `leaf` relative to leaf `reference`: +1 or -1, or 0 when the
/// two coincide.
int leaf_side(const GeodesicH2& leaf, const GeodesicH2& reference);

/// True when `middle` separates `a` from `b`.
bool separates(const GeodesicH2& middle, const GeodesicH2& a, const GeodesicH2& b);

/// Open geodesic segment between two distinct disk points.
class GeodesicArc {
 public:
  GeodesicArc(PointH2 start, PointH2 end);
  const PointH2& start() const noexcept { return start_; }
  const PointH2& end() const noexcept { return end_; }
  double length() const { return dist_h2(start_, end_); }

 private:
  PointH2 start_, end_;
};

/// Total weight of the leaves crossed by the open arc. Throws NotTransverse if
/// an endpoint lies on a leaf.
double transverse_measure(const FiniteLamination& lamination, const GeodesicArc& arc);

/// A maximal set of leaves crossed by one open arc of length < 1, listed in
/// the order the arc crosses them.
struct RoundnessWitness {
  double value = 0.0;
  std::vector<std::size_t> chain;
};

/// Exact roundness sup_C mu(C) over open unit arcs C.
double roundness(const FiniteLamination& lamination);
RoundnessWitness roundness_witness(const FiniteLamination& lamination);

/// Monte Carlo lower estimate of the roundness: the largest transverse
/// measure over `samples` unit arcs starting uniformly (in hyperbolic area)
/// in the disk of the given radius about the origin, in uniform directions.
double sampled_roundness(const FiniteLamination& lamination, std::size_t samples, std::uint64_t seed,
                         double radius = 2.0);

/// Same leaves, weights multiplied by c > 0 (NonpositiveScale otherwise).
FiniteLamination scale(const FiniteLamination& lamination, double c);

/// Orientation-preserving homeomorphism of the circle, in angles.
using CircleMap = std::function<double(double)>;

struct OrientedPushforward {
  FiniteLamination lamination;
  // Bit i set when the image of leaf i had its stored endpoint order swapped,
  // i.e. its positive side is the image of the old negative side.
  std::uint64_t flipped = 0;
};

FiniteLamination pushforward(const CircleMap& map, const FiniteLamination& lamination);
OrientedPushforward pushforward_oriented(const CircleMap& map, const FiniteLamination& lamination);

}  // namespace domekit
