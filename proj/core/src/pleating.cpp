#include "domekit/pleating.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace domekit {

namespace {

constexpr SideMask bit(std::size_t i) { return SideMask{1} << i; }

// ceil() that ignores rounding noise just above an integer.
double ceil_tolerant(double x) { return std::ceil(x - 1e-12 * std::max(1.0, std::abs(x))); }

}  // namespace

// ------------------------------------------------------------ GapStructure

GapStructure::GapStructure(FiniteLamination lamination) : lamination_(std::move(lamination)) {
  validate(lamination_);
  const std::size_t n = lamination_.size();
  if (n == 0) {
    masks_.push_back(0);
    return;
  }
  for (std::size_t k = 0; k < n; ++k) {
    SideMask around = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != k && leaf_side(lamination_.leaf(k), lamination_.leaf(j)) > 0) around |= bit(j);
    }
    masks_.push_back(around);
    masks_.push_back(around | bit(k));
  }
  std::sort(masks_.begin(), masks_.end());
  masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

SideMask GapStructure::mask(GapId gap) const {
  if (gap >= masks_.size()) throw Error(ErrorCode::UnknownGap, "gap " + std::to_string(gap));
  return masks_[gap];
}

GapId GapStructure::find(SideMask mask) const {
  const auto it = std::lower_bound(masks_.begin(), masks_.end(), mask);
  if (it == masks_.end() || *it != mask) throw Error(ErrorCode::UnknownGap, "no gap with this side mask");
  return static_cast<GapId>(it - masks_.begin());
}

GapId GapStructure::gap_of_point(Complex z) const {
  SideMask m = 0;
  for (std::size_t i = 0; i < lamination_.size(); ++i) {
    if (signed_distance(lamination_.leaf(i), z) >= 0.0) m |= bit(i);
  }
  return find(m);
}

GapId GapStructure::gap_of_boundary(double angle) const {
  SideMask m = 0;
  for (std::size_t i = 0; i < lamination_.size(); ++i) {
    const GeodesicH2& leaf = lamination_.leaf(i);
    int side = leaf.arc_side(angle);
    if (side == 0) {
      side = angular_separation(angle, leaf.first().angle()) <= kAngleTolerance ? 1 : -1;
    }
    if (side > 0) m |= bit(i);
  }
  return find(m);
}

std::vector<std::size_t> GapStructure::separating_leaves(GapId from, GapId to) const {
  const SideMask a = mask(from);
  const SideMask diff = a ^ mask(to);
  std::vector<std::size_t> leaves;
  for (std::size_t i = 0; i < lamination_.size(); ++i) {
    if (diff & bit(i)) leaves.push_back(i);
  }
  // A separating leaf k precedes j when j lies beyond k, seen from `from`.
  std::vector<std::size_t> depth(lamination_.size(), 0);
  for (std::size_t j : leaves) {
    for (std::size_t k : leaves) {
      if (k == j) continue;
      const int side_of_j = leaf_side(lamination_.leaf(j), lamination_.leaf(k));
      const int side_of_from = (a & bit(k)) ? 1 : -1;
      if (side_of_j != side_of_from) ++depth[j];
    }
  }
  std::stable_sort(leaves.begin(), leaves.end(),
                   [&](std::size_t x, std::size_t y) { return depth[x] < depth[y]; });
  return leaves;
}

std::vector<MobiusMap> shear_bend_maps(const GapStructure& gaps, GapId base, Complex parameter) {
  const SideMask base_mask = gaps.mask(base);
  (void)base_mask;
  std::vector<MobiusMap> maps;
  maps.reserve(gaps.size());
  const FiniteLamination& lam = gaps.lamination();
  for (GapId g = 0; g < gaps.size(); ++g) {
    MobiusMap m;
    const SideMask gm = gaps.mask(g);
    for (std::size_t leaf : gaps.separating_leaves(base, g)) {
      const double side = (gm & bit(leaf)) ? 1.0 : -1.0;
      const GeodesicH2& l = lam.leaf(leaf);
      m = m * MobiusMap::complex_shear(l.first().z(), l.second().z(), side * lam.weight(leaf) * parameter);
    }
    maps.push_back(m);
  }
  return maps;
}

// ------------------------------------------------------------ PleatedPlane

PleatedPlane::PleatedPlane(FiniteLamination lamination, GapId base, double bend_scale)
    : gaps_(std::move(lamination)), base_(base), bend_scale_(bend_scale) {
  gaps_.mask(base_);
  maps_ = shear_bend_maps(gaps_, base_, Complex(0.0, bend_scale_));
}

PointH3 PleatedPlane::operator()(Complex p) const {
  return poincare_extension(maps_[gaps_.gap_of_point(p)], disk_to_hemisphere(p));
}

ExtendedComplex PleatedPlane::ideal_trace(double angle) const {
  return maps_[gaps_.gap_of_boundary(angle)](std::polar(1.0, angle));
}

PleatedPlane pleat(const FiniteLamination& lamination, GapId base, double bend_scale) {
  return {lamination, base, bend_scale};
}

PointH3 pleat_apply(const PleatedPlane& plane, const PointH2& p) { return plane(p.z()); }

// ----------------------------------------------------------- EarthquakeMap

EarthquakeMap::EarthquakeMap(FiniteLamination lamination, GapId base, double shear_scale)
    : gaps_(std::move(lamination)), base_(base), shear_scale_(shear_scale) {
  gaps_.mask(base_);
  maps_ = shear_bend_maps(gaps_, base_, Complex(shear_scale_, 0.0));
}

Complex EarthquakeMap::operator()(Complex p) const {
  return maps_[gaps_.gap_of_point(p)](p).value();
}

double EarthquakeMap::boundary(double angle) const {
  const ExtendedComplex w = maps_[gaps_.gap_of_boundary(angle)](std::polar(1.0, angle));
  return wrap_angle(std::arg(w.value()));
}

EarthquakeMap earthquake(const FiniteLamination& lamination, GapId base, double shear_scale) {
  return {lamination, base, shear_scale};
}

CircleMap boundary_map(const EarthquakeMap& quake) {
  return [quake](double angle) { return quake.boundary(angle); };
}

// ------------------------------------------------------- ComplexEarthquake

namespace {

OrientedPushforward pushed(const EarthquakeMap& quake) {
  return pushforward_oriented(boundary_map(quake), quake.lamination());
}

}  // namespace

ComplexEarthquake::ComplexEarthquake(FiniteLamination lamination, Complex parameter, GapId base)
    : parameter_(parameter),
      shear_(std::move(lamination), base, parameter.real()),
      flipped_(0),
      bending_([&] {
        const OrientedPushforward image = pushed(shear_);
        flipped_ = image.flipped;
        const GapStructure image_gaps(image.lamination);
        const GapId image_base = image_gaps.find(shear_.gaps().mask(base) ^ image.flipped);
        return PleatedPlane(image.lamination, image_base, parameter.imag());
      }()) {
  const GapStructure& gaps = shear_.gaps();
  maps_.reserve(gaps.size());
  for (GapId g = 0; g < gaps.size(); ++g) {
    const GapId image = bending_.gaps().find(gaps.mask(g) ^ flipped_);
    maps_.push_back(bending_.gap_isometry(image) * shear_.gap_map(g));
  }
}

PointH3 ComplexEarthquake::operator()(Complex p) const {
  return poincare_extension(maps_[shear_.gaps().gap_of_point(p)], disk_to_hemisphere(p));
}

ExtendedComplex ComplexEarthquake::boundary_trace(double angle) const {
  return maps_[shear_.gaps().gap_of_boundary(angle)](std::polar(1.0, angle));
}

ComplexEarthquake complex_earthquake(const FiniteLamination& lamination, Complex parameter, GapId base) {
  return {lamination, parameter, base};
}

// ---------------------------------------------------------------- T0Region

T0Region::T0Region(double c2) : c2_(c2) {
  if (!(c2 > 0.0)) throw Error(ErrorCode::NonpositiveInput, "c2 must be positive");
}

double T0Region::f(double length, double x) {
  const double ax = std::abs(x);
  return std::min(std::asinh(std::exp(ax) * std::sinh(length)), std::exp(0.5 * ax) * std::sinh(length));
}

double T0Region::height_bound(double x) const { return c2_ / ceil_tolerant(f(1.0, x)); }

bool T0Region::contains(Complex t) const { return std::abs(t.imag()) < height_bound(t.real()); }

bool in_T0(Complex t, double c2) { return T0Region(c2).contains(t); }

// ---------------------------------------------------------- embedding check

EmbeddingReport embedding_check(const PleatedPlane& plane, std::size_t samples, std::uint64_t seed,
                                double radius) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double cosh_r = std::cosh(radius);
  auto sample = [&] {
    const double rho = std::acosh(1.0 + unit(rng) * (cosh_r - 1.0));
    return std::polar(std::tanh(0.5 * rho), kTwoPi * unit(rng));
  };
  EmbeddingReport report;
  report.min_ratio = std::numeric_limits<double>::infinity();
  report.max_ratio = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const Complex p = sample();
    const Complex q = sample();
    const double d2 = dist_h2(p, q);
    if (d2 < 1e-9) continue;
    const double d3 = dist_h3(plane(p), plane(q));
    ++report.pairs;
    const double ratio = d3 / d2;
    if (ratio < report.min_ratio) {
      report.min_ratio = ratio;
      report.worst_first = p;
      report.worst_second = q;
    }
    report.max_ratio = std::max(report.max_ratio, ratio);
    if (d2 > 1e-6 && d3 < 1e-9) ++report.collisions;
  }
  return report;
}

}  // namespace domekit
