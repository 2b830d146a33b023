#pragma once

// Domes of finite ideal configurations: the boundary of the hyperbolic
// convex hull of finitely many points of the Riemann sphere, its bending
// lines, the nearest point retraction and the intrinsic injectivity radius.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "domekit/hyperbolic.hpp"

namespace domekit {

/// Points closer than this on the sphere are rejected as coincident.
inline constexpr double kCoincidenceTolerance = 1e-9;
/// Klein-model tolerance for coplanarity and the convexity certificate.
inline constexpr double kCoplanarTolerance = 1e-10;

class IdealConfiguration {
 public:
  /// Throws TooFewPoints below 3 points, NumericallyCoincident for repeats.
  explicit IdealConfiguration(std::vector<ExtendedComplex> points);

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<ExtendedComplex>& points() const noexcept { return points_; }
  const ExtendedComplex& point(std::size_t i) const { return points_.at(i); }
  const Vec3& sphere(std::size_t i) const { return sphere_.at(i); }
  bool concyclic() const noexcept { return concyclic_; }

 private:
  std::vector<ExtendedComplex> points_;
  std::vector<Vec3> sphere_;
  bool concyclic_ = false;
};

struct HullFace {
  PlaneH3 plane;
  /// Cyclic, counterclockwise seen from outside the hull.
  std::vector<std::size_t> vertices;
  /// Supporting plane { x : normal . x = offset } in the Klein model; the
  /// hull lies on the side normal . x <= offset.
  Vec3 normal;
  double offset;
  std::vector<std::size_t> edges;
};

struct HullEdge {
  std::size_t v0, v1;
  std::size_t face0, face1;
  /// Exterior dihedral angle (bending angle), in [0, pi].
  double angle;
  /// Edge of a doubled polygon (concyclic input), angle pi.
  bool fold;
};

class HullPolyhedron {
 public:
  HullPolyhedron(IdealConfiguration config, std::vector<HullFace> faces, std::vector<HullEdge> edges,
                 bool degenerate);

  const IdealConfiguration& config() const noexcept { return config_; }
  const std::vector<HullFace>& faces() const noexcept { return faces_; }
  const std::vector<HullEdge>& edges() const noexcept { return edges_; }
  const HullFace& face(std::size_t i) const { return faces_.at(i); }
  const HullEdge& edge(std::size_t i) const { return edges_.at(i); }
  bool degenerate() const noexcept { return degenerate_; }

  /// V - E + F.
  long euler_characteristic() const;
  /// Largest violation of the half-space inequalities by any ideal point.
  double convexity_violation() const;
  /// Face on the other side of an edge.
  std::size_t across(std::size_t edge, std::size_t face) const;

 private:
  IdealConfiguration config_;
  std::vector<HullFace> faces_;
  std::vector<HullEdge> edges_;
  bool degenerate_;
};

HullPolyhedron build_hull(const IdealConfiguration& config);

/// Exterior dihedral angle between two Klein-model supporting planes.
double exterior_angle(const Vec3& n1, double c1, const Vec3& n2, double c2);

struct BendingLine {
  std::size_t edge;
  ExtendedComplex first, second;
  double weight;
};

/// Edges with positive bending angle, folds of a doubled polygon excluded.
std::vector<BendingLine> bending_lamination(const HullPolyhedron& hull);

/// Point of the face at the given Klein-model barycentric weights.
PointH3 face_point(const HullPolyhedron& hull, std::size_t face, const std::vector<double>& weights);
PointH3 face_centroid(const HullPolyhedron& hull, std::size_t face);

enum class Carrier { Face, Edge };

struct RetractionResult {
  PointH3 point;
  Carrier carrier;
  std::size_t index;
  /// Busemann function of z at the point, normalized to vanish at (0, 0, 1).
  double busemann;
};

/// Nearest point retraction of z onto the dome. Throws PointNotInDomain when
/// z is one of the ideal points.
RetractionResult retract(const HullPolyhedron& hull, const ExtendedComplex& z);

/// Mobius maps permuting the ideal points (the identity included).
std::vector<MobiusMap> symmetry_group(const IdealConfiguration& config);

struct InjectivityEstimate {
  double radius;       // half the shortest loop found
  double loop_length;  // its length
  bool exact;          // no shorter loop can exist
  std::size_t tiles;   // developed face copies visited
  std::size_t depth;   // deepest crossing sequence expanded
};

struct DevelopOptions {
  std::size_t max_depth = 40;
  std::size_t max_tiles = 200000;
};

/// Half the length of the shortest essential loop through p on the dome,
/// found by developing face copies into the plane of `face`. Throws
/// DepthTooSmall when no loop closes within the limits.
InjectivityEstimate dome_injectivity_radius(const HullPolyhedron& hull, std::size_t face, const PointH3& p,
                                            DevelopOptions options = {});
InjectivityEstimate dome_injectivity_radius(const HullPolyhedron& hull, std::size_t face, const PointH3& p,
                                            std::size_t depth);

/// Total bending crossed by the dome geodesic of the given length leaving p
/// in direction `direction` (an angle in the developed chart centered at p).
double bending_along_arc(const HullPolyhedron& hull, std::size_t face, const PointH3& p, double direction,
                         double length);

/// Triangulated dome in the ball model as Wavefront OBJ, each face
/// subdivided `subdivisions` times along each side.
void write_obj(std::ostream& out, const HullPolyhedron& hull, std::size_t subdivisions = 8);

}  // namespace domekit
