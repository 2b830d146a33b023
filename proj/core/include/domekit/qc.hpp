#pragma once

// Grid estimates of the Beltrami coefficient mu = f_zbar / f_z of a sampled
// map and of its dilatation K = (1 + |mu|) / (1 - |mu|).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "domekit/hyperbolic.hpp"

namespace domekit {

enum class GridKind {
  Cartesian,  // nodes x0 + i*h, y0 + j*h (equal spacing in both directions)
  LogPolar,   // nodes exp(rho0 + i*h_rho) * exp(i*(phi0 + j*h_phi))
};

using PlaneMap = std::function<Complex(Complex)>;

/// Values of a map on a rectangular node array, stored row-major with the
/// first coordinate fastest. Masked nodes are excluded from estimates.
struct GridSample {
  GridKind kind = GridKind::Cartesian;
  double u0 = 0.0, v0 = 0.0;  // x0, y0 or rho0, phi0
  double hu = 0.0, hv = 0.0;
  std::size_t nu = 0, nv = 0;
  bool periodic_v = false;  // full circle in phi
  std::vector<Complex> values;
  std::vector<std::uint8_t> valid;

  Complex node(std::size_t i, std::size_t j) const;
  std::size_t index(std::size_t i, std::size_t j) const { return j * nu + i; }
};

/// n x n nodes on the square [x0, x0 + side] x [y0, y0 + side].
GridSample sample_cartesian(const PlaneMap& f, Complex corner, double side, std::size_t n,
                            const std::function<bool(Complex)>& keep = {});
/// n x n nodes on { r_min <= |z| <= r_max }, full circle in arg.
GridSample sample_annulus(const PlaneMap& f, double r_min, double r_max, std::size_t n);

enum class CellFlag : std::uint8_t { Valid, Masked, DegenerateJacobian, OrientationReversing };

struct BeltramiField {
  std::size_t nu = 0, nv = 0;
  std::vector<Complex> points;
  std::vector<Complex> mu;
  std::vector<double> K;
  std::vector<CellFlag> flags;
  std::size_t count(CellFlag flag) const;
};

/// Central-difference Wirtinger derivatives. On Cartesian grids the axis and
/// diagonal differences are blended (2 axis + diagonal) / 3, which leaves an
/// error proportional to h^2 times the gradient of the Laplacian. Nodes on
/// the grid edge, or next to a masked node, are masked.
BeltramiField beltrami_estimate(const GridSample& sample, unsigned threads = 0);

struct DilatationStats {
  std::size_t cells = 0;
  double sup_K = 0.0;
  Complex sup_location{};
  double mean_K = 0.0;
  double p50 = 0.0, p90 = 0.0, p99 = 0.0;
  double sup_abs_mu = 0.0;
};

/// Throws EmptyField when no cell is valid.
DilatationStats dilatation_stats(const BeltramiField& field);

/// Largest |K - target| over valid cells.
double max_deviation(const BeltramiField& field, double target);

struct ScalingReport {
  Complex w;
  double theta = 0.0;
  std::size_t grid = 0;
  double analytic_K = 0.0;
  std::optional<double> kappa_L;  // set when w is i(t - t0)/t0 for imaginary t, t0
  DilatationStats stats;
  double max_deviation = 0.0;
};

/// Estimates the dilatation of S_w on the part of W_theta with 1/2 <= |z| <= 1
/// (cells within 2h of the wedge edges masked) on an n x n grid.
ScalingReport verify_scaling_dilatation(Complex w, double theta, std::size_t n, unsigned threads = 0);

struct AnnulusExtremalReport {
  double s = 0.0;
  double alpha = 0.0;
  double source_modulus = 0.0;
  double target_modulus = 0.0;
  double analytic_K = 0.0;  // max(alpha, 1/alpha)
  double required_K = 0.0;  // K(s), to reach the dome modulus
  DilatationStats stats;
};

/// The radial power map z |z|^{alpha - 1} from {1 < |z| < e^s} onto
/// {1 < |z| < e^{alpha s}}, estimated in logarithmic charts on both sides.
AnnulusExtremalReport annulus_extremal_check(double s, double alpha, std::size_t n, unsigned threads = 0);

/// Named analytic fixtures for the CLI and tests.
struct Fixture {
  std::string name;
  GridSample sample;
  double expected_K;
};
/// identity, affine, conjugate, power, mobius, scaling.
Fixture make_fixture(const std::string& name, std::size_t n, double parameter = 0.0);
std::vector<std::string> fixture_names();

}  // namespace domekit
