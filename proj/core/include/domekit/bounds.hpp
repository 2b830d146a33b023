#pragma once

// Closed-form bounds relating the injectivity radius of a hyperbolic plane
// domain (nu) or of its dome (nu_hat) to the quasiconformal constant of the
// nearest point retraction, the roundness of the bending lamination, and
// annulus moduli. All quantities are dimensionless hyperbolic lengths.

#include <optional>

namespace domekit {

namespace constants {
/// m = acosh(e^2).
double m();
/// e^m = e^2 + sqrt(e^4 - 1).
double exp_m();
/// k = 4 + log(3 + 2 sqrt 2).
double k();
/// The fixed bending anchor (K_t0, y0) = (2, 1/3).
inline constexpr double kKt0 = 2.0;
inline constexpr double kY0 = 1.0 / 3.0;
}  // namespace constants

/// Upper end of the domain of F, 2 asinh(1).
double F_domain_limit();
/// x/2 + asinh(sinh(x/2) / sqrt(1 - sinh^2(x/2))) on [0, 2 asinh 1).
double F(double x);
/// Inverse of F by bisection; G(0) = 0.
double G(double x);
/// e^{-m} e^{-pi^2 / 2 nu} / 2.
double g(double nu);

struct DomeRoundnessBound {
  double exact;    // 2 pi ceil(1 / G(nu_hat))
  double relaxed;  // 4 pi / nu_hat + 2 pi
};
DomeRoundnessBound roundness_bound_dome(double nu_hat);

struct DomainRoundnessBound {
  double tight;    // 8 pi e^m e^{pi^2 / 2 nu} + 2 pi
  double relaxed;  // 370 e^{pi^2 / 2 nu} + 2 pi
};
DomainRoundnessBound roundness_bound_domain(double nu);

/// 48 pi e^m e^{pi^2 / 2 nu} + 12 pi.
double M_bound(double nu);
/// 2220 e^{pi^2 / 2 nu} + 38.
double M_bound_relaxed(double nu);
/// 24 pi / nu_hat + 12 pi.
double N_bound(double nu_hat);
/// 2 sqrt 2 (k + pi^2 / 2 nu).
double lipschitz_bound(double nu);
/// nu e^{pi^2 / (2 sqrt(e) nu)} / (pi^2 e^{pi/2}) for nu in (0, 0.5).
double lower_bound_K(double nu);

struct ModulusBounds {
  double upper;  // pi / l
  double lower;  // pi / (l e^{l/2})
};
ModulusBounds modulus_bounds(double core_length);

/// 4 pi e^{0.502 pi} / e^{pi^2 / (sqrt(e) L)}.
double geodesic_image_length_bound(double length);

/// Lower bound for K obtained from a closed geodesic of length L = 2 nu on
/// the domain and the length bound L' of its image on the dome, through
/// both modulus estimates: K >= L / (L' e^{L'/2}).
double retraction_lower_bound_chain(double nu);

struct BoundReport {
  std::optional<double> nu;
  std::optional<double> nu_hat;
  std::optional<double> M;
  std::optional<double> M_relaxed;
  std::optional<double> lipschitz;
  std::optional<DomainRoundnessBound> domain_roundness;
  std::optional<double> lower_K;
  std::optional<double> N;
  std::optional<DomeRoundnessBound> dome_roundness;
  std::optional<double> G_nu_hat;

  /// Re-evaluates every relation the report asserts.
  bool M_le_relaxed() const;
  bool M_chain_holds() const;
  bool domain_tight_le_relaxed() const;
  bool lower_le_M() const;
  bool N_chain_holds() const;
  bool dome_exact_le_relaxed() const;
};

BoundReport bound_report(std::optional<double> nu, std::optional<double> nu_hat);

}  // namespace domekit
