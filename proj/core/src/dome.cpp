#include "domekit/dome.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_map>

namespace domekit {

namespace {

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 mul(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

PointH3 klein_to_point(const Vec3& k) {
  const double r2 = dot(k, k);
  return PointH3::from_ball(mul(1.0 / (1.0 + std::sqrt(std::max(0.0, 1.0 - r2))), k));
}

std::vector<std::size_t> order_cyclically(const std::vector<Vec3>& pts, const std::vector<std::size_t>& ids,
                                          const Vec3& normal) {
  Vec3 centroid{0, 0, 0};
  for (std::size_t i : ids) centroid = add(centroid, pts[i]);
  centroid = mul(1.0 / static_cast<double>(ids.size()), centroid);
  Vec3 e1 = sub(pts[ids[0]], centroid);
  e1 = sub(e1, mul(dot(e1, normal), normal));
  e1 = mul(1.0 / norm(e1), e1);
  const Vec3 e2 = cross(normal, e1);
  std::vector<std::pair<double, std::size_t>> keyed;
  for (std::size_t i : ids) {
    const Vec3 d = sub(pts[i], centroid);
    keyed.emplace_back(std::atan2(dot(d, e2), dot(d, e1)), i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::size_t> out;
  for (const auto& [angle, i] : keyed) out.push_back(i);
  return out;
}

}  // namespace

// ------------------------------------------------------- IdealConfiguration

IdealConfiguration::IdealConfiguration(std::vector<ExtendedComplex> points) : points_(std::move(points)) {
  if (points_.size() < 3) throw Error(ErrorCode::TooFewPoints, "need at least 3 ideal points");
  for (const auto& p : points_) sphere_.push_back(to_sphere(p));
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (norm(sub(sphere_[i], sphere_[j])) <= kCoincidenceTolerance) {
        throw Error(ErrorCode::NumericallyCoincident,
                    "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
    }
  }
  Vec3 n = cross(sub(sphere_[1], sphere_[0]), sub(sphere_[2], sphere_[0]));
  n = mul(1.0 / norm(n), n);
  const double c = dot(n, sphere_[0]);
  concyclic_ = std::all_of(sphere_.begin(), sphere_.end(),
                           [&](const Vec3& x) { return std::abs(dot(n, x) - c) <= kCoplanarTolerance; });
}

// ----------------------------------------------------------- HullPolyhedron

HullPolyhedron::HullPolyhedron(IdealConfiguration config, std::vector<HullFace> faces, std::vector<HullEdge> edges,
                               bool degenerate)
    : config_(std::move(config)), faces_(std::move(faces)), edges_(std::move(edges)), degenerate_(degenerate) {}

long HullPolyhedron::euler_characteristic() const {
  return static_cast<long>(config_.size()) - static_cast<long>(edges_.size()) + static_cast<long>(faces_.size());
}

double HullPolyhedron::convexity_violation() const {
  double worst = 0.0;
  for (const auto& f : faces_) {
    for (std::size_t i = 0; i < config_.size(); ++i) {
      worst = std::max(worst, dot(f.normal, config_.sphere(i)) - f.offset);
    }
  }
  return worst;
}

std::size_t HullPolyhedron::across(std::size_t edge, std::size_t face) const {
  const HullEdge& e = edges_.at(edge);
  return e.face0 == face ? e.face1 : e.face0;
}

double exterior_angle(const Vec3& n1, double c1, const Vec3& n2, double c2) {
  const double cosine = (dot(n1, n2) - c1 * c2) / std::sqrt((1.0 - c1 * c1) * (1.0 - c2 * c2));
  return std::acos(std::clamp(cosine, -1.0, 1.0));
}

HullPolyhedron build_hull(const IdealConfiguration& config) {
  const std::size_t n = config.size();
  std::vector<Vec3> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(config.sphere(i));

  struct Candidate {
    Vec3 normal;
    double offset;
    std::vector<std::size_t> vertices;
  };
  std::vector<Candidate> found;
  auto add_candidate = [&](const Vec3& normal, double offset) {
    std::vector<std::size_t> on;
    for (std::size_t m = 0; m < n; ++m) {
      if (std::abs(dot(normal, pts[m]) - offset) <= kCoplanarTolerance) on.push_back(m);
    }
    for (const auto& c : found) {
      if (c.vertices == on && dot(c.normal, normal) > 0.0) return;
    }
    found.push_back({normal, offset, std::move(on)});
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec3 nrm = cross(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
        const double len = norm(nrm);
        if (len < 1e-300) continue;
        nrm = mul(1.0 / len, nrm);
        const double c = dot(nrm, pts[i]);
        double hi = -std::numeric_limits<double>::infinity(), lo = std::numeric_limits<double>::infinity();
        for (std::size_t m = 0; m < n; ++m) {
          const double s = dot(nrm, pts[m]) - c;
          hi = std::max(hi, s);
          lo = std::min(lo, s);
        }
        if (hi <= kCoplanarTolerance) add_candidate(nrm, c);
        if (lo >= -kCoplanarTolerance) add_candidate(mul(-1.0, nrm), -c);
      }
    }
  }

  const bool degenerate = config.concyclic();
  std::vector<HullFace> faces;
  for (const auto& c : found) {
    const auto cyc = order_cyclically(pts, c.vertices, c.normal);
    const GeneralizedCircle circle =
        GeneralizedCircle::through(config.point(cyc[0]), config.point(cyc[1]), config.point(cyc[2]));
    faces.push_back({PlaneH3(circle), cyc, c.normal, c.offset, {}});
  }

  std::vector<HullEdge> edges;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_pair;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& vs = faces[f].vertices;
    for (std::size_t a = 0; a < vs.size(); ++a) {
      const std::size_t u = vs[a], v = vs[(a + 1) % vs.size()];
      const auto key = std::minmax(u, v);
      const auto it = by_pair.find(key);
      if (it == by_pair.end()) {
        by_pair[key] = edges.size();
        edges.push_back({key.first, key.second, f, f, 0.0, degenerate});
      } else {
        edges[it->second].face1 = f;
      }
    }
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    HullEdge& edge = edges[e];
    if (edge.face0 == edge.face1) {
      throw Error(ErrorCode::NumericallyCoincident, "hull edge with a single incident face");
    }
    const HullFace& f0 = faces[edge.face0];
    const HullFace& f1 = faces[edge.face1];
    edge.angle = degenerate ? kPi : exterior_angle(f0.normal, f0.offset, f1.normal, f1.offset);
    faces[edge.face0].edges.push_back(e);
    faces[edge.face1].edges.push_back(e);
  }
  return {config, std::move(faces), std::move(edges), degenerate};
}

std::vector<BendingLine> bending_lamination(const HullPolyhedron& hull) {
  std::vector<BendingLine> out;
  for (std::size_t e = 0; e < hull.edges().size(); ++e) {
    const HullEdge& edge = hull.edge(e);
    if (edge.fold || edge.angle <= 1e-12) continue;
    out.push_back({e, hull.config().point(edge.v0), hull.config().point(edge.v1), edge.angle});
  }
  return out;
}

PointH3 face_point(const HullPolyhedron& hull, std::size_t face, const std::vector<double>& weights) {
  const HullFace& f = hull.face(face);
  if (weights.size() != f.vertices.size()) throw Error(ErrorCode::InvalidPoint, "one weight per face vertex");
  Vec3 k{0, 0, 0};
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0.0)) throw Error(ErrorCode::InvalidPoint, "weights must be positive");
    k = add(k, mul(weights[i], hull.config().sphere(f.vertices[i])));
    total += weights[i];
  }
  return klein_to_point(mul(1.0 / total, k));
}

PointH3 face_centroid(const HullPolyhedron& hull, std::size_t face) {
  return face_point(hull, face, std::vector<double>(hull.face(face).vertices.size(), 1.0));
}

// ---------------------------------------------------------------- retraction

RetractionResult retract(const HullPolyhedron& hull, const ExtendedComplex& z) {
  const IdealConfiguration& cfg = hull.config();
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    if (chordal_distance(z, cfg.point(i)) < 1e-12) {
      throw Error(ErrorCode::PointNotInDomain, "z is ideal point " + std::to_string(i));
    }
  }
  // Send z to infinity; the Busemann function there is -log t, so the
  // retraction is the highest point of the transformed hull.
  const MobiusMap to_top = z.is_infinite() ? MobiusMap() : MobiusMap(0.0, 1.0, 1.0, -z.value());
  std::vector<Complex> w;
  for (const auto& p : cfg.points()) w.push_back(to_top(p).value());

  double best_t = -1.0;
  Complex best_z{};
  Carrier carrier = Carrier::Face;
  std::size_t index = 0;
  for (std::size_t f = 0; f < hull.faces().size(); ++f) {
    const auto& vs = hull.face(f).vertices;
    const GeneralizedCircle c = GeneralizedCircle::through(w[vs[0]], w[vs[1]], w[vs[2]]);
    if (c.is_line()) continue;
    // The top of the hemisphere lies on the face when its center is inside
    // the inscribed polygon.
    bool inside = true;
    int orientation = 0;
    for (std::size_t a = 0; a < vs.size() && inside; ++a) {
      const Complex p = w[vs[a]], q = w[vs[(a + 1) % vs.size()]];
      const double s = ((q - p) * std::conj(c.center() - p)).imag();
      const int sign = s > 0 ? -1 : (s < 0 ? 1 : 0);
      if (sign == 0) continue;
      if (orientation == 0) orientation = sign;
      if (sign != orientation) inside = false;
    }
    if (inside && c.radius() > best_t * (1.0 + 1e-12)) {
      best_t = c.radius();
      best_z = c.center();
      carrier = Carrier::Face;
      index = f;
    }
  }
  for (std::size_t e = 0; e < hull.edges().size(); ++e) {
    const Complex a = w[hull.edge(e).v0], b = w[hull.edge(e).v1];
    const double t = 0.5 * std::abs(a - b);
    if (t > best_t * (1.0 + 1e-12)) {
      best_t = t;
      best_z = 0.5 * (a + b);
      carrier = Carrier::Edge;
      index = e;
    }
  }
  const PointH3 top(best_z, best_t);
  const PointH3 point = poincare_extension(to_top.inverse(), top);
  return {point, carrier, index, busemann(z, point, PointH3(0.0, 0.0, 1.0))};
}

std::vector<MobiusMap> symmetry_group(const IdealConfiguration& config) {
  const std::size_t n = config.size();
  const std::array<ExtendedComplex, 3> from{config.point(0), config.point(1), config.point(2)};
  std::vector<MobiusMap> group;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        const MobiusMap m =
            MobiusMap::from_triples(from, {config.point(a), config.point(b), config.point(c)});
        bool preserves = true;
        for (std::size_t i = 0; i < n && preserves; ++i) {
          const ExtendedComplex image = m(config.point(i));
          preserves = std::any_of(config.points().begin(), config.points().end(), [&](const ExtendedComplex& q) {
            return chordal_distance(image, q) < 1e-8;
          });
        }
        if (preserves) group.push_back(m);
      }
    }
  }
  return group;
}

// ---------------------------------------------------------------- developing

namespace {

// Developing chart: Q sends the plane of the base face to the unit
// hemisphere and p to its top, so developed copies live in the unit disk
// with p at the origin.
struct Developer {
  const HullPolyhedron& hull;
  std::size_t base;
  MobiusMap chart;
  // crossing[e][0]: rotation carrying face1 of e into the plane of face0 on
  // the far side; crossing[e][1]: the reverse.
  std::vector<std::array<MobiusMap, 2>> crossing;

  Developer(const HullPolyhedron& h, std::size_t face, const PointH3& p) : hull(h), base(face) {
    const HullFace& f = hull.face(face);
    if (std::abs(f.plane.residual(p)) > 1e-8 * std::max(1.0, p.t())) {
      throw Error(ErrorCode::InvalidPoint, "point is not on the face plane");
    }
    const auto& cfg = hull.config();
    const MobiusMap to_unit = MobiusMap::from_triples(
        {cfg.point(f.vertices[0]), cfg.point(f.vertices[1]), cfg.point(f.vertices[2])},
        {Complex(1.0, 0.0), Complex(0.0, 1.0), Complex(-1.0, 0.0)});
    const Complex q = hemisphere_to_disk(poincare_extension(to_unit, p));
    chart = MobiusMap::disk_automorphism(q) * to_unit;
    crossing.resize(hull.edges().size());
    for (std::size_t e = 0; e < hull.edges().size(); ++e) {
      const HullEdge& edge = hull.edge(e);
      crossing[e][0] = rotation(edge, edge.face0, edge.face1);
      crossing[e][1] = rotation(edge, edge.face1, edge.face0);
    }
  }

  // Rotation about the edge taking `to` into the plane of `from`, opposite it.
  MobiusMap rotation(const HullEdge& edge, std::size_t from, std::size_t to) const {
    const auto& cfg = hull.config();
    const ExtendedComplex a = cfg.point(edge.v0), b = cfg.point(edge.v1);
    const MobiusMap frame = MobiusMap::to_zero_infinity(a, b);
    auto side_angle = [&](std::size_t face) {
      for (std::size_t v : hull.face(face).vertices) {
        if (v != edge.v0 && v != edge.v1) return std::arg(frame(cfg.point(v)).value());
      }
      throw Error(ErrorCode::NumericallyCoincident, "face without a third vertex");
    };
    const double phi = side_angle(from) + kPi - side_angle(to);
    return MobiusMap::complex_shear(a, b, Complex(0.0, phi));
  }

  const MobiusMap& cross_edge(std::size_t e, std::size_t from_face) const {
    return crossing[e][hull.edge(e).face0 == from_face ? 0 : 1];
  }

  // Sorted angles of the developed vertices of a face copy.
  std::vector<double> vertex_angles(std::size_t face, const MobiusMap& develop) const {
    const MobiusMap m = chart * develop;
    std::vector<double> out;
    for (std::size_t v : hull.face(face).vertices) out.push_back(wrap_angle(std::arg(m(hull.config().point(v)).value())));
    std::sort(out.begin(), out.end());
    return out;
  }

  static double distance_to_polygon(const std::vector<double>& angles) {
    double gap = angles.front() + kTwoPi - angles.back();
    for (std::size_t i = 0; i + 1 < angles.size(); ++i) gap = std::max(gap, angles[i + 1] - angles[i]);
    if (gap < kPi) return 0.0;
    const double delta = 0.5 * (kTwoPi - gap);
    const double rho = (1.0 - std::sin(delta)) / std::cos(delta);
    return 2.0 * std::atanh(rho);
  }

  Complex develop_point(const MobiusMap& develop, const PointH3& x) const {
    return hemisphere_to_disk(poincare_extension(chart * develop, x));
  }
};

struct TileKey {
  std::size_t face;
  long long x, y;
  bool operator==(const TileKey& o) const { return face == o.face && x == o.x && y == o.y; }
};

struct TileKeyHash {
  std::size_t operator()(const TileKey& k) const {
    std::size_t h = std::hash<std::size_t>()(k.face);
    h ^= std::hash<long long>()(k.x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<long long>()(k.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

InjectivityEstimate dome_injectivity_radius(const HullPolyhedron& hull, std::size_t face, const PointH3& p,
                                            DevelopOptions options) {
  const Developer dev(hull, face, p);
  if (Developer::distance_to_polygon(dev.vertex_angles(face, MobiusMap())) > 0.0) {
    throw Error(ErrorCode::InvalidPoint, "point is not inside the face");
  }
  // Each face copy is recognized by where it puts an asymmetric interior
  // reference point, in hyperboloid coordinates of the chart.
  std::vector<PointH3> reference;
  for (std::size_t f = 0; f < hull.faces().size(); ++f) {
    std::vector<double> w(hull.face(f).vertices.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = 1.0 + static_cast<double>(i);
    reference.push_back(face_point(hull, f, w));
  }
  constexpr double kQuantum = 1e-6;
  auto key_of = [&](std::size_t f, const MobiusMap& d, long long dx, long long dy) {
    const Complex w = dev.develop_point(d, reference[f]);
    const Complex h = 2.0 * w / (1.0 - std::norm(w));
    return TileKey{f, static_cast<long long>(std::floor(h.real() / kQuantum)) + dx,
                   static_cast<long long>(std::floor(h.imag() / kQuantum)) + dy};
  };
  std::unordered_map<TileKey, std::size_t, TileKeyHash> seen;
  auto known = [&](std::size_t f, const MobiusMap& d) {
    for (long long dx = -1; dx <= 1; ++dx) {
      for (long long dy = -1; dy <= 1; ++dy) {
        if (seen.count(key_of(f, d, dx, dy))) return true;
      }
    }
    return false;
  };

  struct Tile {
    std::size_t face;
    MobiusMap develop;
    std::size_t depth;
  };
  std::vector<Tile> tiles{{face, MobiusMap(), 0}};
  seen[key_of(face, MobiusMap(), 0, 0)] = 0;
  using Entry = std::tuple<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  queue.emplace(0.0, 0);

  double best = std::numeric_limits<double>::infinity();
  double truncated = std::numeric_limits<double>::infinity();
  std::size_t deepest = 0;
  while (!queue.empty()) {
    const auto [dist, id] = queue.top();
    queue.pop();
    if (dist >= best) break;
    const Tile tile = tiles[id];
    if (tile.depth >= options.max_depth) {
      truncated = std::min(truncated, dist);
      continue;
    }
    deepest = std::max(deepest, tile.depth + 1);
    for (std::size_t e : hull.face(tile.face).edges) {
      const std::size_t next = hull.across(e, tile.face);
      const MobiusMap develop = tile.develop * dev.cross_edge(e, tile.face);
      if (known(next, develop)) continue;
      if (tiles.size() >= options.max_tiles) {
        truncated = std::min(truncated, dist);
        continue;
      }
      const double d = Developer::distance_to_polygon(dev.vertex_angles(next, develop));
      seen[key_of(next, develop, 0, 0)] = tiles.size();
      tiles.push_back({next, develop, tile.depth + 1});
      if (next == face) {
        const double loop = 2.0 * std::atanh(std::abs(dev.develop_point(develop, p)));
        if (loop > 1e-9) best = std::min(best, loop);
      }
      if (d < best) queue.emplace(d, tiles.size() - 1);
    }
  }
  if (!std::isfinite(best)) {
    throw Error(ErrorCode::DepthTooSmall, "no essential loop closes within the search limits");
  }
  return {0.5 * best, best, truncated >= best, tiles.size(), deepest};
}

InjectivityEstimate dome_injectivity_radius(const HullPolyhedron& hull, std::size_t face, const PointH3& p,
                                            std::size_t depth) {
  DevelopOptions options;
  options.max_depth = depth;
  return dome_injectivity_radius(hull, face, p, options);
}

double bending_along_arc(const HullPolyhedron& hull, std::size_t face, const PointH3& p, double direction,
                         double length) {
  const Developer dev(hull, face, p);
  std::size_t current = face;
  MobiusMap develop;
  std::size_t entered = std::numeric_limits<std::size_t>::max();
  double total = 0.0;
  for (int step = 0; step < 100000; ++step) {
    // The ray leaves through the edge whose outer arc contains its endpoint.
    const MobiusMap m = dev.chart * develop;
    std::size_t exit = entered;
    double exit_distance = 0.0;
    for (std::size_t e : hull.face(current).edges) {
      if (e == entered) continue;
      const HullEdge& edge = hull.edge(e);
      const double a = wrap_angle(std::arg(m(hull.config().point(edge.v0)).value()));
      const double b = wrap_angle(std::arg(m(hull.config().point(edge.v1)).value()));
      // Outer arc: the arc between a and b free of the other vertices.
      double lo = std::min(a, b), hi = std::max(a, b);
      bool wraps = false;
      for (std::size_t v : hull.face(current).vertices) {
        if (v == edge.v0 || v == edge.v1) continue;
        const double c = wrap_angle(std::arg(m(hull.config().point(v)).value()));
        if (c > lo && c < hi) wraps = true;
      }
      const double psi = wrap_angle(direction);
      const bool on_arc = wraps ? (psi < lo || psi > hi) : (psi > lo && psi < hi);
      if (!on_arc) continue;
      const double span = wraps ? kTwoPi - (hi - lo) : hi - lo;
      const double mid = wraps ? hi + 0.5 * span : lo + 0.5 * span;
      const double delta = 0.5 * span;
      const double x = std::cos(psi - mid) / std::cos(delta);
      const double rho = x - std::sqrt(std::max(0.0, x * x - 1.0));
      exit = e;
      exit_distance = 2.0 * std::atanh(rho);
    }
    if (exit == entered || exit_distance >= length) return total;
    const HullEdge& edge = hull.edge(exit);
    if (!edge.fold) total += edge.angle;
    develop = develop * dev.cross_edge(exit, current);
    current = hull.across(exit, current);
    entered = exit;
  }
  return total;
}

void write_obj(std::ostream& out, const HullPolyhedron& hull, std::size_t subdivisions) {
  const std::size_t n = std::max<std::size_t>(1, subdivisions);
  out << "# domekit dome, ball model\n";
  std::size_t next_index = 1;
  for (const auto& f : hull.faces()) {
    const Vec3& a = hull.config().sphere(f.vertices[0]);
    for (std::size_t k = 1; k + 1 < f.vertices.size(); ++k) {
      const Vec3& b = hull.config().sphere(f.vertices[k]);
      const Vec3& c = hull.config().sphere(f.vertices[k + 1]);
      // Barycentric lattice on the flat Klein triangle, lifted to the ball.
      std::vector<std::vector<std::size_t>> id(n + 1);
      for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j + i <= n; ++j) {
          const double u = static_cast<double>(i) / static_cast<double>(n);
          const double v = static_cast<double>(j) / static_cast<double>(n);
          const Vec3 kp = add(add(mul(1.0 - u - v, a), mul(u, b)), mul(v, c));
          const double r2 = dot(kp, kp);
          const Vec3 bp = mul(1.0 / (1.0 + std::sqrt(std::max(0.0, 1.0 - r2))), kp);
          out << "v " << bp[0] << ' ' << bp[1] << ' ' << bp[2] << '\n';
          id[i].push_back(next_index++);
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j + i < n; ++j) {
          out << "f " << id[i][j] << ' ' << id[i + 1][j] << ' ' << id[i][j + 1] << '\n';
          if (j + i + 1 < n) out << "f " << id[i + 1][j] << ' ' << id[i + 1][j + 1] << ' ' << id[i][j + 1] << '\n';
        }
      }
    }
  }
}

}  // namespace domekit
