#pragma once

// The round annulus Omega(s) = { 1 < |z| < e^s } and its dome, where every
// quantity is known in closed form.

#include <optional>

namespace domekit {

struct AnnulusGeometry {
  double s;
  double outer_radius;      // e^s
  double modulus;             // s / 2pi
  double core_length;         // 2 pi^2 / s
  double nu;                  // pi^2 / s
  double dome_modulus;        // sinh(s/2) / 2
  double dome_core_length;    // 2 pi / sinh(s/2)
  double nu_hat;              // pi / sinh(s/2)
  double K;                   // pi sinh(s/2) / s
};

AnnulusGeometry annulus_geometry(double s);

struct AnnulusVerdict {
  double K;
  double M;
  double N;
  std::optional<double> lower;  // only when nu(s) < 0.5
  bool K_le_M;
  bool K_le_N;
  bool lower_le_K;  // true when inactive
  bool all() const noexcept { return K_le_M && K_le_N && lower_le_K; }
};

AnnulusVerdict verify_bounds(double s);

struct AsymptoticRatios {
  double r1;                 // K 2pi / (nu e^{pi^2 / 2 nu})
  std::optional<double> r2;  // K 2 nu_hat log(1 / nu_hat) / pi^2, for nu_hat < 1
};

AsymptoticRatios asymptotic_ratios(double s);

}  // namespace domekit
