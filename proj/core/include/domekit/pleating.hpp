#pragma once

// Pleated planes, earthquakes and complex earthquakes along finite
// laminations.
//
// Conventions. The base plane is the unit hemisphere over the unit circle
// (disk_to_hemisphere), so an unbent plane has the identity as ideal trace.
// Crossing leaf l from the base side toward gap g, the far side is moved by
// the complex shear about l with parameter s * w * z, where w is the leaf
// weight, s = +1 if g lies on the positive side of l and -1 otherwise, and
// z = x + iy: x shears the far side to the left as seen from the leaf,
// y bends it toward the disk side of the base hemisphere.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "domekit/lamination.hpp"

namespace domekit {

using GapId = std::size_t;
using SideMask = std::uint64_t;

inline constexpr double kC2Default = 0.73;
inline constexpr double kC2Sharp = 0.948;

/// The complementary regions ("gaps") of a finite lamination. A gap is
/// identified by its side mask: bit i is set when the gap lies on the
/// positive side of leaf i. Ids index the sorted list of masks.
class GapStructure {
 public:
  explicit GapStructure(FiniteLamination lamination);

  const FiniteLamination& lamination() const noexcept { return lamination_; }
  std::size_t size() const noexcept { return masks_.size(); }
  SideMask mask(GapId gap) const;
  /// Throws UnknownGap if no gap has this mask.
  GapId find(SideMask mask) const;
  /// Points on a leaf are assigned to its positive side.
  GapId gap_of_point(Complex z) const;
  /// Leaf endpoints are assigned to the gap just counterclockwise of them.
  GapId gap_of_boundary(double angle) const;
  /// Leaves separating `from` and `to`, ordered outward from `from`.
  std::vector<std::size_t> separating_leaves(GapId from, GapId to) const;

 private:
  FiniteLamination lamination_;
  std::vector<SideMask> masks_;
};

/// One Mobius map per gap: the ordered product of complex shears about the
/// leaves separating it from the base gap.
std::vector<MobiusMap> shear_bend_maps(const GapStructure& gaps, GapId base, Complex parameter);

/// P_{y mu}: isometric on each gap, bent by y times the weight along each leaf.
class PleatedPlane {
 public:
  PleatedPlane(FiniteLamination lamination, GapId base, double bend_scale = 1.0);

  const GapStructure& gaps() const noexcept { return gaps_; }
  const FiniteLamination& lamination() const noexcept { return gaps_.lamination(); }
  GapId base() const noexcept { return base_; }
  double bend_scale() const noexcept { return bend_scale_; }
  /// Isometry of H^3 (as its boundary Mobius map) applied to the base
  /// plane over the given gap.
  const MobiusMap& gap_isometry(GapId gap) const { return maps_.at(gap); }

  PointH3 operator()(Complex p) const;
  ExtendedComplex ideal_trace(double angle) const;

 private:
  GapStructure gaps_;
  GapId base_;
  double bend_scale_;
  std::vector<MobiusMap> maps_;
};

PleatedPlane pleat(const FiniteLamination& lamination, GapId base, double bend_scale = 1.0);
PointH3 pleat_apply(const PleatedPlane& plane, const PointH2& p);

/// E_{x mu}: left earthquake fixing the base gap.
class EarthquakeMap {
 public:
  EarthquakeMap(FiniteLamination lamination, GapId base, double shear_scale = 1.0);

  const GapStructure& gaps() const noexcept { return gaps_; }
  const FiniteLamination& lamination() const noexcept { return gaps_.lamination(); }
  GapId base() const noexcept { return base_; }
  double shear_scale() const noexcept { return shear_scale_; }
  const MobiusMap& gap_map(GapId gap) const { return maps_.at(gap); }

  Complex operator()(Complex p) const;
  /// Boundary extension, a piecewise Mobius homeomorphism of the circle.
  double boundary(double angle) const;

 private:
  GapStructure gaps_;
  GapId base_;
  double shear_scale_;
  std::vector<MobiusMap> maps_;
};

EarthquakeMap earthquake(const FiniteLamination& lamination, GapId base, double shear_scale = 1.0);
CircleMap boundary_map(const EarthquakeMap& quake);

/// CE_z = P_{y E_{x mu}(mu)} o E_{x mu}, built literally as that composition.
class ComplexEarthquake {
 public:
  ComplexEarthquake(FiniteLamination lamination, Complex parameter, GapId base);

  Complex parameter() const noexcept { return parameter_; }
  const EarthquakeMap& shear() const noexcept { return shear_; }
  const PleatedPlane& bending() const noexcept { return bending_; }
  /// Boundary Mobius map of the isometry used on a gap of the original
  /// lamination.
  const MobiusMap& gap_map(GapId gap) const { return maps_.at(gap); }

  PointH3 operator()(Complex p) const;
  ExtendedComplex boundary_trace(double angle) const;

 private:
  Complex parameter_;
  EarthquakeMap shear_;
  std::uint64_t flipped_;
  PleatedPlane bending_;
  std::vector<MobiusMap> maps_;
};

ComplexEarthquake complex_earthquake(const FiniteLamination& lamination, Complex parameter,
                                     GapId base = 0);

/// The neighbourhood { x+iy : |y| < c2 / ceil(f(1, x)) } of the origin.
class T0Region {
 public:
  explicit T0Region(double c2 = kC2Default);

  double c2() const noexcept { return c2_; }
  /// f(L, x) = min(asinh(e^|x| sinh L), e^{|x|/2} sinh L).
  static double f(double length, double x);
  /// c2 / ceil(f(1, x)), the admissible |y| bound at real part x.
  double height_bound(double x) const;
  bool contains(Complex t) const;

 private:
  double c2_;
};

bool in_T0(Complex t, double c2 = kC2Default);

struct EmbeddingReport {
  std::size_t pairs = 0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  std::size_t collisions = 0;
  Complex worst_first{};
  Complex worst_second{};
};

/// Samples point pairs uniformly (hyperbolic area) from the disk of the
/// given radius and compares H^3 and H^2 distances. A collision is a pair
/// more than 1e-6 apart in H^2 whose images are within 1e-9.
EmbeddingReport embedding_check(const PleatedPlane& plane, std::size_t samples, std::uint64_t seed,
                                double radius = 3.0);

}  // namespace domekit
