#pragma once

// Models of the hyperbolic plane (Poincare disk) and hyperbolic 3-space
// (upper half-space, with conversions to the Poincare ball), Mobius maps and
// their Poincare extensions, geodesics, distances and Busemann functions.

#include <array>
#include <complex>
#include <numbers>

#include "domekit/errors.hpp"

namespace domekit {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Interior points of the disk closer than this to the unit circle are rejected.
inline constexpr double kBoundaryMargin = 1e-9;
// Two boundary angles closer than this are treated as the same ideal point.
inline constexpr double kAngleTolerance = 1e-12;

/// Reduces an angle to [0, 2pi).
double wrap_angle(double angle);

/// Unsigned angular separation of two angles on the circle, in [0, pi].
double angular_separation(double a, double b);

/// A point of the Riemann sphere: a complex number or infinity.
class ExtendedComplex {
 public:
  ExtendedComplex() = default;
  ExtendedComplex(Complex z) : z_(z) {}  // NOLINT(google-explicit-constructor)
  ExtendedComplex(double x) : z_(x, 0.0) {}  // NOLINT(google-explicit-constructor)

  static ExtendedComplex infinity();

  bool is_infinite() const noexcept { return infinite_; }
  // Undefined (returns 0) for infinity; check is_infinite() first.
  Complex value() const noexcept { return z_; }

 private:
  Complex z_{};
  bool infinite_ = false;
};

/// Inverse stereographic projection onto the unit sphere; infinity is (0,0,1).
Vec3 to_sphere(const ExtendedComplex& z);
ExtendedComplex from_sphere(const Vec3& v);
/// Euclidean distance between the spherical images of two points.
double chordal_distance(const ExtendedComplex& a, const ExtendedComplex& b);

/// Fractional-linear map z -> (az+b)/(cz+d), stored with ad - bc = 1.
class MobiusMap {
 public:
  MobiusMap() = default;
  /// Renormalizes so that the determinant is 1; throws DegenerateMap if the
  /// determinant vanishes.
  MobiusMap(Complex a, Complex b, Complex c, Complex d);

  static MobiusMap identity() { return {}; }
  /// The unique map with from[k] -> to[k], k = 0, 1, 2.
  static MobiusMap from_triples(const std::array<ExtendedComplex, 3>& from,
                                const std::array<ExtendedComplex, 3>& to);
  /// A map sending e1 to 0 and e2 to infinity.
  static MobiusMap to_zero_infinity(const ExtendedComplex& e1, const ExtendedComplex& e2);
  /// Loxodromic map with repelling fixed point e1 and attracting fixed point
  /// e2 (for Re(lambda) > 0): conjugate of z -> e^lambda z under
  /// to_zero_infinity(e1, e2). Re(lambda) translates along the geodesic from
  /// e1 to e2, Im(lambda) rotates about it. lambda = 0 gives the identity
  /// exactly.
  static MobiusMap complex_shear(const ExtendedComplex& e1, const ExtendedComplex& e2,
                                 Complex lambda);
  /// Disk automorphism z -> (z - q) / (1 - conj(q) z), sending q to 0.
  static MobiusMap disk_automorphism(Complex q);

  ExtendedComplex operator()(const ExtendedComplex& z) const;
  /// Composition: (*this * rhs)(z) = (*this)(rhs(z)).
  MobiusMap operator*(const MobiusMap& rhs) const;
  MobiusMap inverse() const { return {d_, -b_, -c_, a_}; }

  Complex a() const noexcept { return a_; }
  Complex b() const noexcept { return b_; }
  Complex c() const noexcept { return c_; }
  Complex d() const noexcept { return d_; }
  Complex trace() const noexcept { return a_ + d_; }
  /// Derivative at a finite point that is not the pole.
  Complex derivative(Complex z) const;
  /// True when the matrix is +-identity within tol (entrywise).
  bool is_identity(double tol) const;

 private:
  Complex a_{1.0}, b_{0.0}, c_{0.0}, d_{1.0};
};

/// Point of the Poincare disk, |z| < 1 - kBoundaryMargin.
class PointH2 {
 public:
  explicit PointH2(Complex z);
  Complex z() const noexcept { return z_; }

 private:
  Complex z_;
};

/// Ideal point of the disk, angle canonicalized to [0, 2pi).
class BoundaryPointH2 {
 public:
  explicit BoundaryPointH2(double angle) : angle_(wrap_angle(angle)) {}
  double angle() const noexcept { return angle_; }
  Complex z() const { return std::polar(1.0, angle_); }

 private:
  double angle_;
};

/// Point (x, y, t) of the upper half-space, t > 0.
class PointH3 {
 public:
  PointH3(double x, double y, double t);
  PointH3(Complex z, double t) : PointH3(z.real(), z.imag(), t) {}

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  double t() const noexcept { return t_; }
  Complex z() const noexcept { return {x_, y_}; }

  /// Poincare ball coordinates; the boundary map agrees with to_sphere().
  Vec3 to_ball() const;
  static PointH3 from_ball(const Vec3& b);

 private:
  double x_, y_, t_;
};

/// Complete geodesic of the disk. Endpoints are stored with
/// first().angle() < second().angle(); the positive side is the one that
/// contains the counterclockwise arc from first() to second().
class GeodesicH2 {
 public:
  GeodesicH2(BoundaryPointH2 a, BoundaryPointH2 b);
  GeodesicH2(double angle_a, double angle_b)
      : GeodesicH2(BoundaryPointH2(angle_a), BoundaryPointH2(angle_b)) {}

  const BoundaryPointH2& first() const noexcept { return first_; }
  const BoundaryPointH2& second() const noexcept { return second_; }

  /// +1 if the boundary angle lies in the open positive arc, -1 in the open
  /// negative arc, 0 at an endpoint.
  int arc_side(double angle) const;
  /// Point of the geodesic closest to the origin.
  Complex midpoint() const;

 private:
  BoundaryPointH2 first_, second_;
};

/// A circle or a line in the plane, i.e. a circle on the Riemann sphere.
class GeneralizedCircle {
 public:
  static GeneralizedCircle circle(Complex center, double radius);
  static GeneralizedCircle line(Complex point, Complex direction);
  /// Circle through three distinct points (a line if one is infinity or the
  /// points are collinear).
  static GeneralizedCircle through(const ExtendedComplex& p, const ExtendedComplex& q,
                                   const ExtendedComplex& r);

  bool is_line() const noexcept { return line_; }
  Complex center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }
  Complex point() const noexcept { return center_; }
  Complex direction() const noexcept { return direction_; }

  /// Signed offset: positive inside a circle / to the left of a line.
  double side(Complex z) const;
  /// Three distinct points on the circle (infinity included for lines).
  std::array<ExtendedComplex, 3> sample_points() const;
  GeneralizedCircle image(const MobiusMap& m) const;

 private:
  bool line_ = false;
  Complex center_{};
  double radius_ = 1.0;
  Complex direction_{1.0, 0.0};
};

/// Totally geodesic plane of H^3, given by its boundary circle.
class PlaneH3 {
 public:
  explicit PlaneH3(GeneralizedCircle boundary) : boundary_(boundary) {}
  const GeneralizedCircle& boundary() const noexcept { return boundary_; }
  /// Euclidean unit normal of the plane (hemisphere or vertical half-plane)
  /// at a point on it; points away from the circle center / to the right
  /// of a line.
  Vec3 normal_at(const PointH3& p) const;
  /// Euclidean residual of p against the hemisphere / vertical plane.
  double residual(const PointH3& p) const;

 private:
  GeneralizedCircle boundary_;
};

double dist_h2(const PointH2& p, const PointH2& q);
/// Disk-model distance for raw coordinates (no boundary check).
double dist_h2(Complex p, Complex q);
double dist_h3(const PointH3& p, const PointH3& q);

/// Map from the disk to the upper half-plane sending first() to 0, second()
/// to infinity and the positive arc to the positive reals.
MobiusMap half_plane_chart(const GeodesicH2& g);
/// Signed hyperbolic distance from z to g, positive on the positive side.
double signed_distance(const GeodesicH2& g, Complex z);

/// True when the endpoints strictly interleave.
bool leaves_cross(const GeodesicH2& g, const GeodesicH2& h);
/// True when the two geodesics share at least one endpoint.
bool leaves_asymptotic(const GeodesicH2& g, const GeodesicH2& h);

struct GeodesicSeparation {
  double distance;
  Complex foot_first;   // on the first geodesic (on the circle if asymptotic)
  Complex foot_second;  // on the second geodesic
};

/// Length of the common perpendicular; throws CrossingLeaves if the
/// geodesics cross.
GeodesicSeparation geodesic_distance(const GeodesicH2& g, const GeodesicH2& h);

/// The point at hyperbolic distance `distance` from p along the direction
/// with Euclidean angle `direction` at p.
Complex disk_exp(Complex p, double direction, double distance);

/// Isometric action of a Mobius map on the upper half-space.
PointH3 poincare_extension(const MobiusMap& m, const PointH3& p);

/// Busemann function at the ideal point xi, normalized to vanish at base.
/// Decreases toward xi; its level sets are horospheres based at xi.
double busemann(const ExtendedComplex& xi, const PointH3& p, const PointH3& base);

/// Isometric embedding of the disk as the unit hemisphere over the unit
/// circle; the ideal boundary is fixed pointwise.
PointH3 disk_to_hemisphere(Complex z);
Complex hemisphere_to_disk(const PointH3& p);

}  // namespace domekit
