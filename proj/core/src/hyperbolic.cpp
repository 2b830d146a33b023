#include "domekit/hyperbolic.hpp"

#include <algorithm>
#include <cmath>

namespace domekit {

namespace {

using Mat = std::array<Complex, 4>;  // a, b, c, d

Mat multiply(const Mat& l, const Mat& r) {
  return {l[0] * r[0] + l[1] * r[2], l[0] * r[1] + l[1] * r[3],
          l[2] * r[0] + l[3] * r[2], l[2] * r[1] + l[3] * r[3]};
}

// Matrix of the map sending (z1, z2, z3) to (0, infinity, 1).
Mat standard_frame(const ExtendedComplex& z1, const ExtendedComplex& z2,
                   const ExtendedComplex& z3) {
  if (z1.is_infinite()) {
    return {0.0, z3.value() - z2.value(), 1.0, -z2.value()};
  }
  if (z2.is_infinite()) {
    return {1.0, -z1.value(), 0.0, z3.value() - z1.value()};
  }
  if (z3.is_infinite()) {
    return {1.0, -z1.value(), 1.0, -z2.value()};
  }
  const Complex u = z3.value() - z2.value();
  const Complex v = z3.value() - z1.value();
  return {u, -z1.value() * u, v, -z2.value() * v};
}

Mat adjugate(const Mat& m) { return {m[3], -m[1], -m[2], m[0]}; }

}  // namespace

double wrap_angle(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double angular_separation(double a, double b) {
  const double d = wrap_angle(a - b);
  return std::min(d, kTwoPi - d);
}

ExtendedComplex ExtendedComplex::infinity() {
  ExtendedComplex z;
  z.infinite_ = true;
  return z;
}

Vec3 to_sphere(const ExtendedComplex& z) {
  if (z.is_infinite()) return {0.0, 0.0, 1.0};
  const Complex w = z.value();
  const double r2 = std::norm(w);
  const double s = 1.0 + r2;
  return {2.0 * w.real() / s, 2.0 * w.imag() / s, (r2 - 1.0) / s};
}

ExtendedComplex from_sphere(const Vec3& v) {
  const double denom = 1.0 - v[2];
  if (denom <= 1e-300) return ExtendedComplex::infinity();
  return Complex(v[0] / denom, v[1] / denom);
}

double chordal_distance(const ExtendedComplex& a, const ExtendedComplex& b) {
  const Vec3 p = to_sphere(a);
  const Vec3 q = to_sphere(b);
  return std::hypot(p[0] - q[0], p[1] - q[1], p[2] - q[2]);
}

// ---------------------------------------------------------------- MobiusMap

MobiusMap::MobiusMap(Complex a, Complex b, Complex c, Complex d) {
  const Complex det = a * d - b * c;
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (!(scale > 0.0) || std::abs(det) <= 1e-300 ||
      std::abs(det) <= 1e-28 * scale * scale || !std::isfinite(std::abs(det))) {
    throw Error(ErrorCode::DegenerateMap, "Mobius determinant vanishes");
  }
  const Complex s = std::sqrt(det);
  a_ = a / s;
  b_ = b / s;
  c_ = c / s;
  d_ = d / s;
}

MobiusMap MobiusMap::from_triples(const std::array<ExtendedComplex, 3>& from,
                                  const std::array<ExtendedComplex, 3>& to) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (chordal_distance(from[i], from[j]) < 1e-14 || chordal_distance(to[i], to[j]) < 1e-14) {
        throw Error(ErrorCode::DegenerateMap, "three-point data must be distinct");
      }
    }
  }
  const Mat s = standard_frame(from[0], from[1], from[2]);
  const Mat t = standard_frame(to[0], to[1], to[2]);
  const Mat m = multiply(adjugate(t), s);
  return {m[0], m[1], m[2], m[3]};
}

MobiusMap MobiusMap::to_zero_infinity(const ExtendedComplex& e1, const ExtendedComplex& e2) {
  if (chordal_distance(e1, e2) < 1e-14) {
    throw Error(ErrorCode::DegenerateMap, "fixed points must be distinct");
  }
  if (e2.is_infinite()) return {1.0, -e1.value(), 0.0, 1.0};
  if (e1.is_infinite()) return {0.0, 1.0, 1.0, -e2.value()};
  return {1.0, -e1.value(), 1.0, -e2.value()};
}

MobiusMap MobiusMap::complex_shear(const ExtendedComplex& e1, const ExtendedComplex& e2,
                                   Complex lambda) {
  const MobiusMap frame = to_zero_infinity(e1, e2);
  const Complex p = frame.a_, q = frame.b_, r = frame.c_, s = frame.d_;
  // A = frame^-1 diag(1, -1) frame, an involution with trace 0.
  const Complex a11 = s * p + q * r;
  const Complex a12 = 2.0 * q * s;
  const Complex a21 = -2.0 * p * r;
  const Complex ch = std::cosh(lambda / 2.0);
  const Complex sh = std::sinh(lambda / 2.0);
  return {ch + sh * a11, sh * a12, sh * a21, ch - sh * a11};
}

MobiusMap MobiusMap::disk_automorphism(Complex q) {
  if (std::abs(q) >= 1.0) throw Error(ErrorCode::InvalidPoint, "center must lie in the disk");
  return {1.0, -q, -std::conj(q), 1.0};
}

ExtendedComplex MobiusMap::operator()(const ExtendedComplex& z) const {
  if (z.is_infinite()) {
    if (c_ == Complex(0.0)) return ExtendedComplex::infinity();
    return a_ / c_;
  }
  const Complex w = z.value();
  const Complex den = c_ * w + d_;
  if (den == Complex(0.0)) return ExtendedComplex::infinity();
  return (a_ * w + b_) / den;
}

MobiusMap MobiusMap::operator*(const MobiusMap& rhs) const {
  const Mat m = multiply({a_, b_, c_, d_}, {rhs.a_, rhs.b_, rhs.c_, rhs.d_});
  return {m[0], m[1], m[2], m[3]};
}

Complex MobiusMap::derivative(Complex z) const {
  const Complex den = c_ * z + d_;
  return 1.0 / (den * den);
}

bool MobiusMap::is_identity(double tol) const {
  auto close = [tol](Complex x, Complex y) { return std::abs(x - y) <= tol; };
  const bool plus = close(a_, 1.0) && close(d_, 1.0) && close(b_, 0.0) && close(c_, 0.0);
  const bool minus = close(a_, -1.0) && close(d_, -1.0) && close(b_, 0.0) && close(c_, 0.0);
  return plus || minus;
}

// ------------------------------------------------------------------ points

PointH2::PointH2(Complex z) : z_(z) {
  if (!(std::abs(z) < 1.0 - kBoundaryMargin)) {
    throw Error(ErrorCode::InvalidPoint, "disk point must satisfy |z| < 1 - 1e-9");
  }
}

PointH3::PointH3(double x, double y, double t) : x_(x), y_(y), t_(t) {
  if (!(t > 0.0) || !std::isfinite(x) || !std::isfinite(y) || !std::isfinite(t)) {
    throw Error(ErrorCode::InvalidPoint, "upper half-space point needs finite x, y and t > 0");
  }
}

Vec3 PointH3::to_ball() const {
  const double r2 = x_ * x_ + y_ * y_;
  const double den = r2 + (t_ + 1.0) * (t_ + 1.0);
  return {2.0 * x_ / den, 2.0 * y_ / den, (r2 + t_ * t_ - 1.0) / den};
}

PointH3 PointH3::from_ball(const Vec3& b) {
  // Reflect the last coordinate, then invert in the sphere about (0,0,-1)
  // of radius sqrt(2); this undoes to_ball().
  const double ux = b[0], uy = b[1], uz = -b[2] + 1.0;
  const double n = ux * ux + uy * uy + uz * uz;
  return {2.0 * ux / n, 2.0 * uy / n, -1.0 + 2.0 * uz / n};
}

GeodesicH2::GeodesicH2(BoundaryPointH2 a, BoundaryPointH2 b) : first_(a), second_(b) {
  if (angular_separation(a.angle(), b.angle()) <= kAngleTolerance) {
    throw Error(ErrorCode::InvalidPoint, "geodesic endpoints must be distinct");
  }
  if (first_.angle() > second_.angle()) std::swap(first_, second_);
}

int GeodesicH2::arc_side(double angle) const {
  if (angular_separation(angle, first_.angle()) <= kAngleTolerance ||
      angular_separation(angle, second_.angle()) <= kAngleTolerance) {
    return 0;
  }
  const double phi = wrap_angle(angle);
  return (phi > first_.angle() && phi < second_.angle()) ? 1 : -1;
}

Complex GeodesicH2::midpoint() const {
  const double half = 0.5 * (second_.angle() - first_.angle());
  const double mid = 0.5 * (first_.angle() + second_.angle());
  // Closest Euclidean point of the orthogonal circle: (1 - sin d) / cos d
  // along the bisector of the arc of half-width d <= pi/2.
  double d = half;
  double dir = mid;
  if (d > kPi / 2.0) {
    d = kPi - d;
    dir = mid + kPi;
  }
  const double rho = std::cos(d) / (1.0 + std::sin(d));
  return std::polar(rho, dir);
}

// -------------------------------------------------------- GeneralizedCircle

GeneralizedCircle GeneralizedCircle::circle(Complex center, double radius) {
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidPoint, "circle radius must be positive");
  GeneralizedCircle c;
  c.line_ = false;
  c.center_ = center;
  c.radius_ = radius;
  return c;
}

GeneralizedCircle GeneralizedCircle::line(Complex point, Complex direction) {
  const double n = std::abs(direction);
  if (!(n > 0.0)) throw Error(ErrorCode::InvalidPoint, "line direction must be nonzero");
  GeneralizedCircle c;
  c.line_ = true;
  c.center_ = point;
  c.direction_ = direction / n;
  return c;
}

GeneralizedCircle GeneralizedCircle::through(const ExtendedComplex& p, const ExtendedComplex& q,
                                             const ExtendedComplex& r) {
  std::array<ExtendedComplex, 3> pts{p, q, r};
  for (int i = 0; i < 3; ++i) {
    if (pts[i].is_infinite()) {
      const Complex a = pts[(i + 1) % 3].value();
      const Complex b = pts[(i + 2) % 3].value();
      return line(a, b - a);
    }
  }
  const Complex a = p.value(), b = q.value(), c = r.value();
  const Complex ab = b - a, ac = c - a;
  const double cross = ab.real() * ac.imag() - ab.imag() * ac.real();
  const double scale = std::abs(ab) * std::abs(ac);
  if (scale == 0.0) throw Error(ErrorCode::NumericallyCoincident, "circle points coincide");
  if (std::abs(cross) <= 1e-13 * scale) return line(a, ab);
  const double d = 2.0 * cross;
  const double nb = std::norm(ab), nc = std::norm(ac);
  const Complex offset((ac.imag() * nb - ab.imag() * nc) / d, (ab.real() * nc - ac.real() * nb) / d);
  return circle(a + offset, std::abs(offset));
}

double GeneralizedCircle::side(Complex z) const {
  if (line_) {
    const Complex v = z - center_;
    return direction_.real() * v.imag() - direction_.imag() * v.real();
  }
  return radius_ - std::abs(z - center_);
}

std::array<ExtendedComplex, 3> GeneralizedCircle::sample_points() const {
  if (line_) return {center_, center_ + direction_, ExtendedComplex::infinity()};
  return {center_ + radius_, center_ + Complex(0.0, radius_), center_ - radius_};
}

GeneralizedCircle GeneralizedCircle::image(const MobiusMap& m) const {
  const auto s = sample_points();
  return through(m(s[0]), m(s[1]), m(s[2]));
}

Vec3 PlaneH3::normal_at(const PointH3& p) const {
  if (boundary_.is_line()) {
    const Complex d = boundary_.direction();
    return {d.imag(), -d.real(), 0.0};
  }
  const Complex c = boundary_.center();
  const double r = boundary_.radius();
  return {(p.x() - c.real()) / r, (p.y() - c.imag()) / r, p.t() / r};
}

double PlaneH3::residual(const PointH3& p) const {
  if (boundary_.is_line()) return boundary_.side(p.z());
  const Complex c = boundary_.center();
  return std::hypot(std::abs(p.z() - c), p.t()) - boundary_.radius();
}

// --------------------------------------------------------------- distances

double dist_h2(Complex p, Complex q) {
  const double den = std::sqrt((1.0 - std::norm(p)) * (1.0 - std::norm(q)));
  return 2.0 * std::asinh(std::abs(p - q) / den);
}

double dist_h2(const PointH2& p, const PointH2& q) { return dist_h2(p.z(), q.z()); }

double dist_h3(const PointH3& p, const PointH3& q) {
  const double e = std::hypot(p.x() - q.x(), p.y() - q.y(), p.t() - q.t());
  return 2.0 * std::asinh(e / (2.0 * std::sqrt(p.t() * q.t())));
}

MobiusMap half_plane_chart(const GeodesicH2& g) {
  const double a1 = g.first().angle();
  const double a2 = g.second().angle();
  const Complex mid = std::polar(1.0, 0.5 * (a1 + a2));
  return MobiusMap::from_triples({g.first().z(), g.second().z(), mid},
                                 {0.0, ExtendedComplex::infinity(), 1.0});
}

double signed_distance(const GeodesicH2& g, Complex z) {
  const ExtendedComplex w = half_plane_chart(g)(z);
  if (w.is_infinite()) return 0.0;
  const Complex v = w.value();
  return std::asinh(v.real() / v.imag());
}

bool leaves_asymptotic(const GeodesicH2& g, const GeodesicH2& h) {
  return h.arc_side(g.first().angle()) == 0 || h.arc_side(g.second().angle()) == 0;
}

bool leaves_cross(const GeodesicH2& g, const GeodesicH2& h) {
  const int s1 = h.arc_side(g.first().angle());
  const int s2 = h.arc_side(g.second().angle());
  return s1 * s2 < 0;
}

GeodesicSeparation geodesic_distance(const GeodesicH2& g, const GeodesicH2& h) {
  if (leaves_cross(g, h)) throw Error(ErrorCode::CrossingLeaves, "geodesics intersect");
  const int s1 = g.arc_side(h.first().angle());
  const int s2 = g.arc_side(h.second().angle());
  if (s1 == 0 && s2 == 0) {
    const Complex m = g.midpoint();
    return {0.0, m, m};
  }
  if (s1 == 0 || s2 == 0) {
    const Complex shared = (s1 == 0) ? h.first().z() : h.second().z();
    return {0.0, shared, shared};
  }
  const MobiusMap chart = half_plane_chart(g);
  const double c = chart(h.first().z()).value().real();
  const double d = chart(h.second().z()).value().real();
  const double product = c * d;
  const double ratio = std::min(std::abs(c), std::abs(d)) / std::max(std::abs(c), std::abs(d));
  const double root = std::sqrt(ratio);
  const double distance = std::log1p(root) - std::log1p(-root);

  const Complex foot_g(0.0, std::sqrt(product));
  const double m = 0.5 * (c + d);
  const double x = product / m;
  const Complex foot_h(x, std::sqrt(std::max(0.0, product - x * x)));
  const MobiusMap back = chart.inverse();
  return {distance, back(foot_g).value(), back(foot_h).value()};
}

Complex disk_exp(Complex p, double direction, double distance) {
  const Complex local = std::polar(std::tanh(0.5 * distance), direction);
  return (local + p) / (1.0 + std::conj(p) * local);
}

PointH3 poincare_extension(const MobiusMap& m, const PointH3& p) {
  const Complex z = p.z();
  const double t = p.t();
  const Complex u = m.c() * z + m.d();
  const double den = std::norm(u) + std::norm(m.c()) * t * t;
  const Complex w = ((m.a() * z + m.b()) * std::conj(u) + m.a() * std::conj(m.c()) * t * t) / den;
  return {w, t / den};
}

double busemann(const ExtendedComplex& xi, const PointH3& p, const PointH3& base) {
  auto level = [&xi](const PointH3& q) {
    if (xi.is_infinite()) return -std::log(q.t());
    const double r2 = std::norm(q.z() - xi.value()) + q.t() * q.t();
    return std::log(r2) - std::log(q.t());
  };
  return level(p) - level(base);
}

PointH3 disk_to_hemisphere(Complex z) {
  const double r2 = std::norm(z);
  return {2.0 * z / (1.0 + r2), (1.0 - r2) / (1.0 + r2)};
}

Complex hemisphere_to_disk(const PointH3& p) { return p.z() / (1.0 + p.t()); }

}  // namespace domekit
