#pragma once

// Crescents (regions between two transversely meeting circles), their
// normalization to the standard wedge W_theta = { 0 <= arg z <= theta }, and
// complex angle scalings S_w(z) = z exp(w arg z) of the wedge.

#include <array>

#include "domekit/hyperbolic.hpp"

namespace domekit {

class Crescent {
 public:
  /// The component of the complement of the two circles containing
  /// `interior`. Throws DegenerateCrescent for tangent or disjoint circles.
  Crescent(GeneralizedCircle first, GeneralizedCircle second, Complex interior);

  /// The standard wedge W_theta itself (circles = the two boundary lines).
  static Crescent wedge(double theta);

  const GeneralizedCircle& first() const noexcept { return first_; }
  const GeneralizedCircle& second() const noexcept { return second_; }
  /// The two intersection points, in the order sent to 0 and infinity.
  const std::array<ExtendedComplex, 2>& vertices() const noexcept { return vertices_; }
  double angle() const noexcept { return theta_; }
  /// beta with beta(crescent) = W_theta.
  const MobiusMap& normalizer() const noexcept { return beta_; }
  bool contains(Complex z) const;

 private:
  GeneralizedCircle first_, second_;
  std::array<ExtendedComplex, 2> vertices_;
  double theta_ = 0.0;
  MobiusMap beta_;
};

/// Intersection points of two generalized circles; throws DegenerateCrescent
/// unless there are exactly two.
std::array<ExtendedComplex, 2> circle_intersections(const GeneralizedCircle& a, const GeneralizedCircle& b);

class AngleScaling {
 public:
  AngleScaling(Complex w, double theta);

  Complex w() const noexcept { return w_; }
  double theta() const noexcept { return theta_; }
  /// (Im w + 1) theta.
  double image_angle() const noexcept { return (w_.imag() + 1.0) * theta_; }
  bool injective() const noexcept;

  /// z exp(w arg z) for z in W_theta; throws OutsideWedge otherwise.
  Complex operator()(Complex z) const;
  /// Constant modulus of the Beltrami coefficient, |w| / |2 - iw|.
  double beltrami_modulus() const;
  /// Beltrami coefficient at z (its argument rotates with arg z).
  Complex beltrami(Complex z) const;

 private:
  Complex w_;
  double theta_;
};

/// Exact dilatation K of S_w; throws NotInjective when (Im w + 1) theta >= 2 pi
/// or Im w <= -1.
double scaling_dilatation(const AngleScaling& scaling);
Complex angle_scale(const AngleScaling& scaling, Complex z);

/// S_w o beta: the crescent onto a crescent of angle (Im w + 1) theta.
class CrescentMap {
 public:
  CrescentMap(Crescent crescent, Complex w);
  const Crescent& crescent() const noexcept { return crescent_; }
  const AngleScaling& scaling() const noexcept { return scaling_; }
  Complex operator()(Complex z) const;
  double dilatation() const { return scaling_dilatation(scaling_); }

 private:
  Crescent crescent_;
  AngleScaling scaling_;
};

/// kappa(t) = (t - t0) / (t + t0).
Complex kappa(Complex t, Complex t0);
/// (1 + |kappa|) / (1 - |kappa|); Undefined when |kappa| >= 1.
double kappa_dilatation(Complex t, Complex t0);
/// The scaling parameter i (t - t0) / t0 conjugate to bending from t0 to t.
Complex scaling_parameter(Complex t, Complex t0);

}  // namespace domekit
