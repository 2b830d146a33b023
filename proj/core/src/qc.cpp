#include "domekit/qc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "domekit/bounds.hpp"
#include "domekit/crescent.hpp"
#include "domekit/parallel.hpp"

namespace domekit {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
const Complex kI(0.0, 1.0);

struct Wirtinger {
  Complex dz, dzbar;
};

bool stencil_valid(const GridSample& g, std::size_t i, std::size_t j) {
  if (i == 0 || i + 1 >= g.nu) return false;
  const bool wrap = g.periodic_v;
  if (!wrap && (j == 0 || j + 1 >= g.nv)) return false;
  const std::size_t jm = j == 0 ? g.nv - 1 : j - 1;
  const std::size_t jp = j + 1 == g.nv ? 0 : j + 1;
  for (std::size_t jj : {jm, j, jp}) {
    for (std::size_t ii : {i - 1, i, i + 1}) {
      if (!g.valid[g.index(ii, jj)]) return false;
    }
  }
  return true;
}

Wirtinger derivatives(const GridSample& g, std::size_t i, std::size_t j) {
  const std::size_t jm = j == 0 ? g.nv - 1 : j - 1;
  const std::size_t jp = j + 1 == g.nv ? 0 : j + 1;
  auto f = [&](std::size_t ii, std::size_t jj) { return g.values[g.index(ii, jj)]; };
  const Complex axis_u = (f(i + 1, j) - f(i - 1, j)) / (2.0 * g.hu);
  const Complex axis_v = (f(i, jp) - f(i, jm)) / (2.0 * g.hv);
  if (g.kind == GridKind::LogPolar) {
    const Complex z = g.node(i, j);
    const Complex d_zeta = 0.5 * (axis_u - kI * axis_v);
    const Complex d_zetabar = 0.5 * (axis_u + kI * axis_v);
    return {d_zeta / z, d_zetabar / std::conj(z)};
  }
  const Complex diag_u = (f(i + 1, jp) - f(i - 1, jp) + f(i + 1, jm) - f(i - 1, jm)) / (4.0 * g.hu);
  const Complex diag_v = (f(i + 1, jp) - f(i + 1, jm) + f(i - 1, jp) - f(i - 1, jm)) / (4.0 * g.hv);
  const Complex fx = (2.0 * axis_u + diag_u) / 3.0;
  const Complex fy = (2.0 * axis_v + diag_v) / 3.0;
  return {0.5 * (fx - kI * fy), 0.5 * (fx + kI * fy)};
}

}  // namespace

Complex GridSample::node(std::size_t i, std::size_t j) const {
  const double u = u0 + static_cast<double>(i) * hu;
  const double v = v0 + static_cast<double>(j) * hv;
  if (kind == GridKind::LogPolar) return std::polar(std::exp(u), v);
  return {u, v};
}

GridSample sample_cartesian(const PlaneMap& f, Complex corner, double side, std::size_t n,
                            const std::function<bool(Complex)>& keep) {
  if (n < 3 || !(side > 0.0)) throw Error(ErrorCode::EmptyField, "grid needs at least 3 nodes per side");
  GridSample g;
  g.kind = GridKind::Cartesian;
  g.u0 = corner.real();
  g.v0 = corner.imag();
  g.hu = g.hv = side / static_cast<double>(n - 1);
  g.nu = g.nv = n;
  g.values.assign(n * n, Complex(kNaN, kNaN));
  g.valid.assign(n * n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Complex z = g.node(i, j);
      if (keep && !keep(z)) continue;
      g.values[g.index(i, j)] = f(z);
      g.valid[g.index(i, j)] = 1;
    }
  }
  return g;
}

GridSample sample_annulus(const PlaneMap& f, double r_min, double r_max, std::size_t n) {
  if (n < 3 || !(r_min > 0.0) || !(r_max > r_min)) throw Error(ErrorCode::EmptyField, "bad annulus grid");
  GridSample g;
  g.kind = GridKind::LogPolar;
  g.u0 = std::log(r_min);
  g.v0 = 0.0;
  g.hu = (std::log(r_max) - g.u0) / static_cast<double>(n - 1);
  g.hv = kTwoPi / static_cast<double>(n);
  g.nu = g.nv = n;
  g.periodic_v = true;
  g.values.resize(n * n);
  g.valid.assign(n * n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) g.values[g.index(i, j)] = f(g.node(i, j));
  }
  return g;
}

std::size_t BeltramiField::count(CellFlag flag) const {
  return static_cast<std::size_t>(std::count(flags.begin(), flags.end(), flag));
}

BeltramiField beltrami_estimate(const GridSample& sample, unsigned threads) {
  const std::size_t total = sample.nu * sample.nv;
  if (sample.values.size() != total || sample.valid.size() != total) {
    throw Error(ErrorCode::EmptyField, "grid sample arrays have the wrong size");
  }
  BeltramiField field;
  field.nu = sample.nu;
  field.nv = sample.nv;
  field.points.resize(total);
  field.mu.assign(total, Complex(kNaN, kNaN));
  field.K.assign(total, kNaN);
  field.flags.assign(total, CellFlag::Masked);
  std::vector<Wirtinger> d(total, Wirtinger{Complex(kNaN, kNaN), Complex(kNaN, kNaN)});
  parallel_for(
      sample.nv,
      [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
          for (std::size_t i = 0; i < sample.nu; ++i) {
            const std::size_t k = sample.index(i, j);
            field.points[k] = sample.node(i, j);
            if (stencil_valid(sample, i, j)) d[k] = derivatives(sample, i, j);
          }
        }
      },
      threads);
  double scale = 0.0;
  for (const auto& w : d) {
    const double s = std::abs(w.dz) + std::abs(w.dzbar);
    if (std::isfinite(s)) scale = std::max(scale, s);
  }
  for (std::size_t k = 0; k < total; ++k) {
    const double a = std::abs(d[k].dz), b = std::abs(d[k].dzbar);
    if (!std::isfinite(a + b)) continue;
    if (a + b < 1e-10 * scale || a < 1e-10 * scale) {
      const bool reversing = a + b >= 1e-10 * scale && b > a;
      field.flags[k] = reversing ? CellFlag::OrientationReversing : CellFlag::DegenerateJacobian;
      field.mu[k] = a > 0.0 ? d[k].dzbar / d[k].dz : Complex(kInf, 0.0);
      field.K[k] = kInf;
      continue;
    }
    field.mu[k] = d[k].dzbar / d[k].dz;
    const double m = std::abs(field.mu[k]);
    if (m >= 1.0) {
      field.flags[k] = CellFlag::OrientationReversing;
      field.K[k] = kInf;
      continue;
    }
    field.flags[k] = CellFlag::Valid;
    field.K[k] = (1.0 + m) / (1.0 - m);
  }
  return field;
}

DilatationStats dilatation_stats(const BeltramiField& field) {
  std::vector<double> ks;
  DilatationStats st;
  double sum = 0.0;
  for (std::size_t k = 0; k < field.K.size(); ++k) {
    if (field.flags[k] != CellFlag::Valid) continue;
    ks.push_back(field.K[k]);
    sum += field.K[k];
    st.sup_abs_mu = std::max(st.sup_abs_mu, std::abs(field.mu[k]));
    if (field.K[k] > st.sup_K) {
      st.sup_K = field.K[k];
      st.sup_location = field.points[k];
    }
  }
  if (ks.empty()) throw Error(ErrorCode::EmptyField, "no valid cells");
  st.cells = ks.size();
  st.mean_K = sum / static_cast<double>(ks.size());
  std::sort(ks.begin(), ks.end());
  auto q = [&](double p) { return ks[static_cast<std::size_t>(p * static_cast<double>(ks.size() - 1))]; };
  st.p50 = q(0.5);
  st.p90 = q(0.9);
  st.p99 = q(0.99);
  return st;
}

double max_deviation(const BeltramiField& field, double target) {
  double worst = 0.0;
  for (std::size_t k = 0; k < field.K.size(); ++k) {
    if (field.flags[k] == CellFlag::Valid) worst = std::max(worst, std::abs(field.K[k] - target));
  }
  return worst;
}

namespace {

GridSample sample_scaling(const AngleScaling& scaling, std::size_t n) {
  const double theta = scaling.theta();
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 0.0;
  auto include = [&](Complex z) {
    xmin = std::min(xmin, z.real());
    xmax = std::max(xmax, z.real());
    ymin = std::min(ymin, z.imag());
    ymax = std::max(ymax, z.imag());
  };
  for (double r : {0.5, 1.0}) include(std::polar(r, theta));
  for (int k = 1; k < 4; ++k) {
    if (k * kPi / 2 < theta) include(std::polar(1.0, k * kPi / 2));
  }
  const double side = std::max(xmax - xmin, ymax - ymin);
  const double h = side / static_cast<double>(n - 1);
  auto edge_distance = [](double r, double phi) { return phi >= kPi / 2 ? r : r * std::sin(phi); };
  auto keep = [=](Complex z) {
    const double r = std::abs(z);
    if (r < 0.5 || r > 1.0) return false;
    double phi = std::arg(z);
    if (phi < 0.0) phi += kTwoPi;
    if (phi > theta) return false;
    return edge_distance(r, phi) >= 2.0 * h && edge_distance(r, theta - phi) >= 2.0 * h;
  };
  return sample_cartesian([&](Complex z) { return scaling(z); }, Complex(xmin, ymin), side, n, keep);
}

}  // namespace

ScalingReport verify_scaling_dilatation(Complex w, double theta, std::size_t n, unsigned threads) {
  const AngleScaling scaling(w, theta);
  ScalingReport report;
  report.w = w;
  report.theta = theta;
  report.grid = n;
  report.analytic_K = scaling_dilatation(scaling);
  if (w.real() == 0.0) {
    // t0 = i y0 and t = i y0 (1 + Im w) give w = i (t - t0) / t0.
    const Complex t0(0.0, constants::kY0);
    const Complex t = t0 * (1.0 + w.imag());
    report.kappa_L = kappa_dilatation(t, t0);
  }
  const BeltramiField field = beltrami_estimate(sample_scaling(scaling, n), threads);
  report.stats = dilatation_stats(field);
  report.max_deviation = max_deviation(field, report.analytic_K);
  return report;
}

AnnulusExtremalReport annulus_extremal_check(double s, double alpha, std::size_t n, unsigned threads) {
  if (!(s > 0.0)) throw Error(ErrorCode::NonpositiveModulusParameter, "s must be positive");
  if (!(alpha > 0.0)) throw Error(ErrorCode::NonpositiveInput, "alpha must be positive");
  AnnulusExtremalReport report;
  report.s = s;
  report.alpha = alpha;
  report.source_modulus = s / kTwoPi;
  report.target_modulus = alpha * s / kTwoPi;
  report.analytic_K = std::max(alpha, 1.0 / alpha);
  report.required_K = kPi * std::sinh(0.5 * s) / s;
  // In the charts zeta = log z on both annuli the power map reads
  // zeta -> alpha Re(zeta) + i Im(zeta).
  const double side = std::min(s, kPi);
  const GridSample g = sample_cartesian(
      [alpha](Complex zeta) { return Complex(alpha * zeta.real(), zeta.imag()); }, Complex(0.0, 0.0), side, n);
  report.stats = dilatation_stats(beltrami_estimate(g, threads));
  return report;
}

std::vector<std::string> fixture_names() { return {"identity", "affine", "conjugate", "power", "mobius", "scaling"}; }

Fixture make_fixture(const std::string& name, std::size_t n, double parameter) {
  const Complex corner(-1.0, -1.0);
  if (name == "identity") return {name, sample_cartesian([](Complex z) { return z; }, corner, 2.0, n), 1.0};
  if (name == "affine") {
    return {name, sample_cartesian([](Complex z) { return Complex(2.0 * z.real(), z.imag()); }, corner, 2.0, n), 2.0};
  }
  if (name == "conjugate") {
    return {name, sample_cartesian([](Complex z) { return std::conj(z); }, corner, 2.0, n), kInf};
  }
  if (name == "power") {
    const double alpha = parameter > 0.0 ? parameter : 2.0;
    auto f = [alpha](Complex z) { return z * std::pow(std::abs(z), alpha - 1.0); };
    return {name, sample_annulus(f, 0.5, 1.0, n), std::max(alpha, 1.0 / alpha)};
  }
  if (name == "mobius") {
    const MobiusMap m(Complex(2.0, 0.5), Complex(0.3, -0.1), Complex(0.2, 0.1), Complex(1.0, 0.0));
    return {name, sample_cartesian([m](Complex z) { return m(z).value(); }, corner, 2.0, n), 1.0};
  }
  if (name == "scaling") {
    const AngleScaling scaling(Complex(0.0, parameter != 0.0 ? parameter : 2.0), kPi / 2);
    return {name, sample_scaling(scaling, n), scaling_dilatation(scaling)};
  }
  throw Error(ErrorCode::ParseError, "unknown fixture '" + name + "'");
}

}  // namespace domekit
