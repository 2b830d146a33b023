#include "domekit/annulus.hpp"

#include <cmath>
#include <numbers>

#include "domekit/bounds.hpp"
#include "domekit/errors.hpp"

namespace domekit {

namespace {
constexpr double kPi = std::numbers::pi;
}

AnnulusGeometry annulus_geometry(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) throw Error(ErrorCode::NonpositiveModulusParameter, "s must be positive");
  const double sh = std::sinh(0.5 * s);
  AnnulusGeometry a;
  a.s = s;
  a.outer_radius = std::exp(s);
  a.modulus = s / (2.0 * kPi);
  a.core_length = 2.0 * kPi * kPi / s;
  a.nu = kPi * kPi / s;
  a.dome_modulus = 0.5 * sh;
  a.dome_core_length = 2.0 * kPi / sh;
  a.nu_hat = kPi / sh;
  a.K = kPi * sh / s;
  return a;
}

AnnulusVerdict verify_bounds(double s) {
  const AnnulusGeometry a = annulus_geometry(s);
  AnnulusVerdict v;
  v.K = a.K;
  v.M = M_bound(a.nu);
  v.N = N_bound(a.nu_hat);
  v.K_le_M = a.K <= v.M;
  v.K_le_N = a.K <= v.N;
  v.lower_le_K = true;
  if (a.nu < 0.5) {
    v.lower = lower_bound_K(a.nu);
    v.lower_le_K = *v.lower <= a.K;
  }
  return v;
}

AsymptoticRatios asymptotic_ratios(double s) {
  const AnnulusGeometry a = annulus_geometry(s);
  AsymptoticRatios r;
  // K 2pi / (nu e^{pi^2 / 2nu}) simplifies to 2 sinh(s/2) e^{-s/2}.
  r.r1 = -std::expm1(-s);
  if (a.nu_hat < 1.0) r.r2 = a.K * 2.0 * a.nu_hat * std::log(1.0 / a.nu_hat) / (kPi * kPi);
  return r;
}

}  // namespace domekit
