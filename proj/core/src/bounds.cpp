#include "domekit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "domekit/errors.hpp"

namespace domekit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

void require_positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw Error(ErrorCode::NonpositiveInput, std::string(name) + " must be positive and finite");
  }
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)); }

}  // namespace

namespace constants {

double m() { return std::acosh(kE * kE); }
double exp_m() { return kE * kE + std::sqrt(std::pow(kE, 4) - 1.0); }
double k() { return 4.0 + std::log(3.0 + 2.0 * std::numbers::sqrt2); }

}  // namespace constants

double F_domain_limit() { return 2.0 * std::asinh(1.0); }

double F(double x) {
  if (!(x >= 0.0) || !(x < F_domain_limit())) throw Error(ErrorCode::OutOfDomain, "F is defined on [0, 2 asinh 1)");
  const double s = std::sinh(0.5 * x);
  const double denom = 1.0 - s * s;
  if (!(denom > 0.0)) throw Error(ErrorCode::OutOfDomain, "F is defined on [0, 2 asinh 1)");
  return 0.5 * x + std::asinh(s / std::sqrt(denom));
}

double G(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw Error(ErrorCode::NonpositiveInput, "G needs x >= 0");
  if (x == 0.0) return 0.0;
  double lo = 0.0, hi = F_domain_limit();
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    double value;
    try {
      value = F(mid);
    } catch (const Error&) {
      hi = mid;
      continue;
    }
    (value < x ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double g(double nu) {
  require_positive(nu, "nu");
  return 0.5 / constants::exp_m() * std::exp(-kPi * kPi / (2.0 * nu));
}

DomeRoundnessBound roundness_bound_dome(double nu_hat) {
  require_positive(nu_hat, "nu_hat");
  const double gv = G(nu_hat);
  return {2.0 * kPi * std::ceil(1.0 / gv), 4.0 * kPi / nu_hat + 2.0 * kPi};
}

DomainRoundnessBound roundness_bound_domain(double nu) {
  require_positive(nu, "nu");
  const double e = std::exp(kPi * kPi / (2.0 * nu));
  return {8.0 * kPi * constants::exp_m() * e + 2.0 * kPi, 370.0 * e + 2.0 * kPi};
}

double M_bound(double nu) {
  require_positive(nu, "nu");
  return 48.0 * kPi * constants::exp_m() * std::exp(kPi * kPi / (2.0 * nu)) + 12.0 * kPi;
}

double M_bound_relaxed(double nu) {
  require_positive(nu, "nu");
  return 2220.0 * std::exp(kPi * kPi / (2.0 * nu)) + 38.0;
}

double N_bound(double nu_hat) {
  require_positive(nu_hat, "nu_hat");
  return 24.0 * kPi / nu_hat + 12.0 * kPi;
}

double lipschitz_bound(double nu) {
  require_positive(nu, "nu");
  return 2.0 * std::numbers::sqrt2 * (constants::k() + kPi * kPi / (2.0 * nu));
}

double lower_bound_K(double nu) {
  if (!(nu > 0.0 && nu < 0.5)) throw Error(ErrorCode::OutOfDomain, "lower_bound_K needs nu in (0, 0.5)");
  return nu * std::exp(kPi * kPi / (2.0 * std::sqrt(kE) * nu)) / (kPi * kPi * std::exp(0.5 * kPi));
}

ModulusBounds modulus_bounds(double core_length) {
  require_positive(core_length, "core length");
  return {kPi / core_length, kPi / (core_length * std::exp(0.5 * core_length))};
}

double geodesic_image_length_bound(double length) {
  require_positive(length, "length");
  return 4.0 * kPi * std::exp(0.502 * kPi) / std::exp(kPi * kPi / (std::sqrt(kE) * length));
}

double retraction_lower_bound_chain(double nu) {
  if (!(nu > 0.0 && nu < 0.5)) throw Error(ErrorCode::OutOfDomain, "chain needs nu in (0, 0.5)");
  const double l = 2.0 * nu;
  const double lp = geodesic_image_length_bound(l);
  // mod >= pi / (L' e^{L'/2}) on the dome, mod <= pi / L on the domain.
  return modulus_bounds(lp).lower / modulus_bounds(l).upper;
}

bool BoundReport::M_le_relaxed() const { return !M || *M <= *M_relaxed; }

bool BoundReport::M_chain_holds() const { return !M || close(*M, 6.0 * domain_roundness->tight); }

bool BoundReport::domain_tight_le_relaxed() const {
  return !domain_roundness || domain_roundness->tight <= domain_roundness->relaxed;
}

bool BoundReport::lower_le_M() const { return !lower_K || *lower_K <= *M; }

bool BoundReport::N_chain_holds() const { return !N || close(*N, 6.0 * dome_roundness->relaxed); }

bool BoundReport::dome_exact_le_relaxed() const {
  return !dome_roundness || dome_roundness->exact <= dome_roundness->relaxed;
}

BoundReport bound_report(std::optional<double> nu, std::optional<double> nu_hat) {
  BoundReport r;
  r.nu = nu;
  r.nu_hat = nu_hat;
  if (nu) {
    r.M = M_bound(*nu);
    r.M_relaxed = M_bound_relaxed(*nu);
    r.lipschitz = lipschitz_bound(*nu);
    r.domain_roundness = roundness_bound_domain(*nu);
    if (*nu < 0.5) r.lower_K = lower_bound_K(*nu);
  }
  if (nu_hat) {
    r.N = N_bound(*nu_hat);
    r.dome_roundness = roundness_bound_dome(*nu_hat);
    r.G_nu_hat = G(*nu_hat);
  }
  return r;
}

}  // namespace domekit
