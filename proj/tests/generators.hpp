#pragma once

// Random inputs shared by the unit and acceptance tests.

#include <random>
#include <vector>

#include "domekit/lamination.hpp"
#include "domekit/pleating.hpp"
#include "oracles.hpp"

namespace testgen {

struct RandomLamination {
  std::vector<oracle::Leaf> leaves;
  std::vector<double> weights;

  domekit::FiniteLamination lamination() const {
    std::vector<domekit::GeodesicH2> g;
    for (const auto& l : leaves) g.emplace_back(l.a, l.b);
    return {g, weights};
  }
};

// Up to `count` pairwise disjoint leaves within hyperbolic distance
// `max_distance` of the origin. Pairs whose separation lies within `margin`
// of `avoid` are rejected, so that sampled unit arcs resolve every chain.
inline RandomLamination random_lamination(std::mt19937_64& rng, std::size_t count, double max_distance,
                                          double min_weight, double max_weight, double avoid = -1.0,
                                          double margin = 0.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  RandomLamination out;
  for (int attempt = 0; attempt < 1000 && out.leaves.size() < count; ++attempt) {
    const oracle::Leaf leaf = oracle::leaf_at(max_distance * u(rng), 2.0 * oracle::pi * u(rng));
    bool ok = true;
    for (const auto& other : out.leaves) {
      if (oracle::interleave(leaf, other)) {
        ok = false;
        break;
      }
      const double d = domekit::geodesic_distance(domekit::GeodesicH2(leaf.a, leaf.b),
                                                  domekit::GeodesicH2(other.a, other.b))
                           .distance;
      if (d < 1e-3 || (avoid > 0.0 && std::abs(d - avoid) < margin)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    out.leaves.push_back(leaf);
    out.weights.push_back(min_weight + (max_weight - min_weight) * u(rng));
  }
  return out;
}

// Exterior dihedral angle of a pleated plane along leaf `leaf`, measured
// from the images of points at small distances on either side of it.
inline double measured_bend(const domekit::PleatedPlane& plane, std::size_t leaf, double offset = 0.2) {
  using domekit::Complex;
  const domekit::GeodesicH2& g = plane.lamination().leaf(leaf);
  const domekit::MobiusMap from_chart = domekit::half_plane_chart(g).inverse();
  auto image = [&](double s, double d) {
    const domekit::PointH3 p = plane(from_chart(std::exp(s) * Complex(std::sinh(d), 1.0)).value());
    return oracle::V3{p.x(), p.y(), p.t()};
  };
  const std::array<oracle::V3, 3> negative{image(-0.4, -offset), image(0.1, -1.5 * offset), image(0.5, -0.7 * offset)};
  const std::array<oracle::V3, 3> positive{image(-0.5, offset), image(0.0, 0.6 * offset), image(0.4, 1.3 * offset)};
  const oracle::V3 P = image(0.0, 0.0);
  const oracle::V3 axis = oracle::sub(image(1e-5, 0.0), image(-1e-5, 0.0));
  return oracle::dihedral_angle(negative, positive, P, axis);
}

}  // namespace testgen
