#include "domekit/crescent.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace domekit {

namespace {

constexpr double kTransverseTolerance = 1e-12;

Complex unit(Complex v) { return v / std::abs(v); }

double arg_positive(Complex z) {
  double a = std::arg(z);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

// A point of the circle away from both vertices.
ExtendedComplex off_vertex_point(const GeneralizedCircle& c, const std::array<ExtendedComplex, 2>& v) {
  const auto samples = c.sample_points();
  ExtendedComplex best = samples[0];
  double best_score = -1.0;
  for (const auto& s : samples) {
    const double score = std::min(chordal_distance(s, v[0]), chordal_distance(s, v[1]));
    if (score > best_score) {
      best_score = score;
      best = s;
    }
  }
  return best;
}

}  // namespace

std::array<ExtendedComplex, 2> circle_intersections(const GeneralizedCircle& a, const GeneralizedCircle& b) {
  if (a.is_line() && b.is_line()) {
    const Complex da = unit(a.direction()), db = unit(b.direction());
    const double cross = da.real() * db.imag() - da.imag() * db.real();
    if (std::abs(cross) < kTransverseTolerance) throw Error(ErrorCode::DegenerateCrescent, "parallel lines");
    const Complex w = b.point() - a.point();
    const double s = (w.real() * db.imag() - w.imag() * db.real()) / cross;
    return {a.point() + s * da, ExtendedComplex::infinity()};
  }
  if (a.is_line() != b.is_line()) {
    const GeneralizedCircle& l = a.is_line() ? a : b;
    const GeneralizedCircle& c = a.is_line() ? b : a;
    const Complex d = unit(l.direction());
    const Complex foot = l.point() + d * (std::conj(d) * (c.center() - l.point())).real();
    const double h2 = c.radius() * c.radius() - std::norm(c.center() - foot);
    if (h2 <= kTransverseTolerance * c.radius() * c.radius()) {
      throw Error(ErrorCode::DegenerateCrescent, "line misses or touches the circle");
    }
    const double h = std::sqrt(h2);
    return {foot - h * d, foot + h * d};
  }
  const Complex delta = b.center() - a.center();
  const double dist = std::abs(delta);
  const double r1 = a.radius(), r2 = b.radius();
  if (dist <= std::abs(r1 - r2) || dist >= r1 + r2) {
    throw Error(ErrorCode::DegenerateCrescent, "circles are disjoint, nested or tangent");
  }
  const double along = (r1 * r1 - r2 * r2 + dist * dist) / (2.0 * dist);
  const double h2 = r1 * r1 - along * along;
  if (h2 <= kTransverseTolerance * r1 * r1) throw Error(ErrorCode::DegenerateCrescent, "circles are tangent");
  const Complex u = delta / dist;
  const Complex foot = a.center() + along * u;
  const double h = std::sqrt(h2);
  return {foot - h * Complex(0.0, 1.0) * u, foot + h * Complex(0.0, 1.0) * u};
}

Crescent::Crescent(GeneralizedCircle first, GeneralizedCircle second, Complex interior)
    : first_(first), second_(second), vertices_(circle_intersections(first, second)) {
  const MobiusMap frame = MobiusMap::to_zero_infinity(vertices_[0], vertices_[1]);
  const ExtendedComplex s = frame(interior);
  if (s.is_infinite() || std::abs(s.value()) < 1e-300) {
    throw Error(ErrorCode::DegenerateCrescent, "interior point is a vertex");
  }
  // The images of the circles are lines through 0; their four rays cut the
  // plane into the wedges of the two crescents and their complements.
  std::vector<double> rays;
  for (const GeneralizedCircle* c : {&first_, &second_}) {
    const ExtendedComplex p = frame(off_vertex_point(*c, vertices_));
    const double a = arg_positive(p.value());
    rays.push_back(a);
    rays.push_back(wrap_angle(a + kPi));
  }
  std::sort(rays.begin(), rays.end());
  const double phi = arg_positive(s.value());
  double lower = rays.back() - kTwoPi, upper = rays.front();
  for (std::size_t k = 0; k + 1 < rays.size(); ++k) {
    if (phi >= rays[k] && phi < rays[k + 1]) {
      lower = rays[k];
      upper = rays[k + 1];
    }
  }
  if (phi >= rays.back()) {
    lower = rays.back();
    upper = rays.front() + kTwoPi;
  }
  theta_ = upper - lower;
  if (theta_ < kTransverseTolerance) throw Error(ErrorCode::DegenerateCrescent, "circles are tangent");
  beta_ = MobiusMap(std::polar(1.0, -lower), 0.0, 0.0, 1.0) * frame;
}

Crescent Crescent::wedge(double theta) {
  // At theta = pi both boundary rays lie on one line, which is not a crescent.
  if (!(theta > 0.0 && theta < kPi)) throw Error(ErrorCode::DegenerateCrescent, "wedge angle must be in (0, pi)");
  const Complex mid = std::polar(1.0, 0.5 * theta);
  return {GeneralizedCircle::line(0.0, 1.0), GeneralizedCircle::line(0.0, std::polar(1.0, theta)), mid};
}

bool Crescent::contains(Complex z) const {
  const ExtendedComplex w = beta_(z);
  if (w.is_infinite()) return false;
  if (std::abs(w.value()) == 0.0) return false;
  return arg_positive(w.value()) <= theta_ + 1e-12;
}

AngleScaling::AngleScaling(Complex w, double theta) : w_(w), theta_(theta) {
  if (!(theta > 0.0) || theta >= kTwoPi) throw Error(ErrorCode::OutsideWedge, "wedge angle must lie in (0, 2pi)");
}

bool AngleScaling::injective() const noexcept { return w_.imag() > -1.0 && image_angle() < kTwoPi; }

Complex AngleScaling::operator()(Complex z) const {
  if (z == Complex(0.0, 0.0)) return z;
  double phi = arg_positive(z);
  if (phi > kTwoPi - 1e-12) phi = 0.0;
  if (phi > theta_ + 1e-12) throw Error(ErrorCode::OutsideWedge, "arg z exceeds the wedge angle");
  return z * std::exp(w_ * phi);
}

double AngleScaling::beltrami_modulus() const { return std::abs(w_) / std::abs(2.0 - Complex(0.0, 1.0) * w_); }

Complex AngleScaling::beltrami(Complex z) const {
  const Complex iw = Complex(0.0, 1.0) * w_;
  return iw / (2.0 - iw) * std::polar(1.0, 2.0 * std::arg(z));
}

double scaling_dilatation(const AngleScaling& scaling) {
  if (!scaling.injective()) {
    throw Error(ErrorCode::NotInjective, "(Im w + 1) theta must lie in (0, 2pi)");
  }
  const double k = scaling.beltrami_modulus();
  return (1.0 + k) / (1.0 - k);
}

Complex angle_scale(const AngleScaling& scaling, Complex z) { return scaling(z); }

CrescentMap::CrescentMap(Crescent crescent, Complex w)
    : crescent_(std::move(crescent)), scaling_(w, crescent_.angle()) {}

Complex CrescentMap::operator()(Complex z) const {
  const ExtendedComplex u = crescent_.normalizer()(z);
  if (u.is_infinite()) throw Error(ErrorCode::OutsideWedge, "vertex at infinity");
  return scaling_(u.value());
}

Complex kappa(Complex t, Complex t0) {
  if (std::abs(t + t0) == 0.0) throw Error(ErrorCode::Undefined, "t + t0 = 0");
  return (t - t0) / (t + t0);
}

double kappa_dilatation(Complex t, Complex t0) {
  const double k = std::abs(kappa(t, t0));
  if (k >= 1.0) throw Error(ErrorCode::Undefined, "|kappa| >= 1");
  return (1.0 + k) / (1.0 - k);
}

Complex scaling_parameter(Complex t, Complex t0) {
  if (std::abs(t0) == 0.0) throw Error(ErrorCode::Undefined, "t0 = 0");
  return Complex(0.0, 1.0) * (t - t0) / t0;
}

}  // namespace domekit
