#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "domekit/annulus.hpp"
#include "domekit/bounds.hpp"
#include "domekit/crescent.hpp"
#include "domekit/dome.hpp"
#include "domekit/io.hpp"
#include "domekit/parallel.hpp"
#include "domekit/pleating.hpp"
#include "domekit/qc.hpp"
#include "json.hpp"

namespace domekit::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct Globals {
  std::string format = "json";
  std::uint64_t seed = 1;
  int threads = 0;
};

// Collects rows and prints them as JSON records or CSV lines.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add(std::vector<ordered_json> row) { rows_.push_back(std::move(row)); }

  void write(std::ostream& out, const std::string& format, ordered_json meta = ordered_json::object()) const {
    if (format == "csv") {
      for (std::size_t c = 0; c < columns_.size(); ++c) out << (c ? "," : "") << columns_[c];
      out << '\n';
      for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
        out << '\n';
      }
      return;
    }
    ordered_json doc;
    doc["schema"] = kSchema;
    for (auto it = meta.begin(); it != meta.end(); ++it) doc[it.key()] = it.value();
    doc["rows"] = ordered_json::array();
    for (const auto& row : rows_) {
      ordered_json r;
      for (std::size_t c = 0; c < row.size(); ++c) r[columns_[c]] = row[c];
      doc["rows"].push_back(r);
    }
    out << doc.dump(2) << '\n';
  }

 private:
  static std::string csv_cell(const ordered_json& v) {
    if (v.is_null()) return "";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return format_double(v.get<double>());
    if (v.is_number()) return v.dump();
    return quote(v.is_string() ? v.get<std::string>() : v.dump());
  }

  static std::string quote(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string q = "\"";
    for (char c : text) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + '"';
  }

  std::vector<std::string> columns_;
  std::vector<std::vector<ordered_json>> rows_;
};

ordered_json number_or_null(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

ordered_json point_json(const ExtendedComplex& z) {
  if (z.is_infinite()) return "inf";
  return ordered_json::array({z.value().real(), z.value().imag()});
}

ExtendedComplex parse_point(const std::string& text) {
  if (text == "inf") return ExtendedComplex::infinity();
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return Complex(std::stod(text), 0.0);
    return Complex(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1)));
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "expected a point 're,im' or 'inf', got '" + text + "'");
  }
}

// Emits a flat key/value record as JSON or as a two-line CSV.
void write_record(std::ostream& out, const std::string& format, const ordered_json& record) {
  if (format == "csv") {
    std::vector<std::string> cols;
    std::vector<ordered_json> row;
    for (auto it = record.begin(); it != record.end(); ++it) {
      cols.push_back(it.key());
      row.push_back(it.value().is_structured() ? ordered_json(it.value().dump()) : it.value());
    }
    Table t(cols);
    t.add(row);
    t.write(out, format);
    return;
  }
  ordered_json doc;
  doc["schema"] = kSchema;
  for (auto it = record.begin(); it != record.end(); ++it) doc[it.key()] = it.value();
  out << doc.dump(2) << '\n';
}

std::vector<double> grid(double lo, double hi, std::size_t n, bool logarithmic) {
  if (n == 0) throw Error(ErrorCode::NonpositiveInput, "--points must be positive");
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    out.push_back(logarithmic ? lo * std::pow(hi / lo, f) : lo + f * (hi - lo));
  }
  return out;
}

// ------------------------------------------------------------------ bounds

void bounds_eval(std::ostream& out, const Globals& g, std::optional<double> nu, std::optional<double> nu_hat) {
  if (!nu && !nu_hat) throw Error(ErrorCode::NonpositiveInput, "give --nu and/or --nu-hat");
  const BoundReport r = bound_report(nu, nu_hat);
  ordered_json rec;
  if (nu) {
    rec["nu"] = *nu;
    rec["M"] = *r.M;
    rec["M_relaxed"] = *r.M_relaxed;
    rec["lipschitz"] = *r.lipschitz;
    rec["g"] = domekit::g(*nu);
    rec["domain_roundness_tight"] = r.domain_roundness->tight;
    rec["domain_roundness_relaxed"] = r.domain_roundness->relaxed;
    if (r.lower_K) {
      rec["lower_bound_K"] = *r.lower_K;
    } else {
      rec["lower_bound_K"] = nullptr;
      rec["lower_bound_K_reason"] = "nu must lie in the open interval (0, 0.5)";
    }
  }
  if (nu_hat) {
    rec["nu_hat"] = *nu_hat;
    rec["N"] = *r.N;
    rec["G"] = *r.G_nu_hat;
    rec["dome_roundness_exact"] = r.dome_roundness->exact;
    rec["dome_roundness_relaxed"] = r.dome_roundness->relaxed;
  }
  rec["M_le_relaxed"] = r.M_le_relaxed();
  rec["M_chain"] = r.M_chain_holds();
  rec["N_chain"] = r.N_chain_holds();
  rec["lower_le_M"] = r.lower_le_M();
  rec["dome_exact_le_relaxed"] = r.dome_exact_le_relaxed();
  write_record(out, g.format, rec);
}

void bounds_table(std::ostream& out, const Globals& g, double lo, double hi, std::size_t points, bool linear) {
  if (!(lo > 0.0) || !(hi >= lo)) throw Error(ErrorCode::NonpositiveInput, "need 0 < nu-min <= nu-max");
  Table t({"nu", "g", "M", "M_relaxed", "lipschitz", "domain_tight", "domain_relaxed", "lower_bound_K", "N_at_g",
           "dome_exact_at_g"});
  for (double nu : grid(lo, hi, points, !linear)) {
    const double gv = domekit::g(nu);
    const DomainRoundnessBound d = roundness_bound_domain(nu);
    const DomeRoundnessBound dome = roundness_bound_dome(gv);
    t.add({nu, gv, M_bound(nu), M_bound_relaxed(nu), lipschitz_bound(nu), d.tight, d.relaxed,
           nu < 0.5 ? ordered_json(lower_bound_K(nu)) : ordered_json(nullptr), N_bound(gv), dome.exact});
  }
  t.write(out, g.format);
}

// ----------------------------------------------------------------- annulus

void annulus_table(std::ostream& out, const Globals& g, double lo, double hi, std::size_t points) {
  Table table({"s", "outer_radius", "modulus", "core_length", "nu", "dome_modulus", "dome_core_length", "nu_hat", "K", "K_le_M",
               "K_le_N", "lower_le_K"});
  for (double s : grid(lo, hi, points, false)) {
    const AnnulusGeometry a = annulus_geometry(s);
    const AnnulusVerdict v = verify_bounds(s);
    table.add({a.s, a.outer_radius, a.modulus, a.core_length, a.nu, a.dome_modulus, a.dome_core_length, a.nu_hat, a.K, v.K_le_M,
               v.K_le_N, v.lower_le_K});
  }
  table.write(out, g.format);
}

// -------------------------------------------------------------------- dome

void dome_build(std::ostream& out, const Globals& g, const std::string& input, const std::string& obj,
                std::size_t subdivisions) {
  const HullPolyhedron hull = build_hull(parse_configuration(read_text_file(input)));
  if (!obj.empty()) {
    std::ofstream f(obj);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + obj + "'");
    write_obj(f, hull, subdivisions);
  }
  if (g.format == "csv") {
    Table t({"edge", "v0", "v1", "face0", "face1", "angle", "fold", "degenerate"});
    for (std::size_t e = 0; e < hull.edges().size(); ++e) {
      const HullEdge& edge = hull.edge(e);
      t.add({e, edge.v0, edge.v1, edge.face0, edge.face1, edge.angle, edge.fold, hull.degenerate()});
    }
    t.write(out, g.format);
    return;
  }
  out << hull_to_json(hull) << '\n';
}

void dome_retract(std::ostream& out, const Globals& g, const std::string& input, const std::vector<std::string>& zs) {
  const HullPolyhedron hull = build_hull(parse_configuration(read_text_file(input)));
  Table t({"z", "x", "y", "t", "carrier", "index", "busemann"});
  for (const auto& text : zs) {
    const ExtendedComplex z = parse_point(text);
    const RetractionResult r = retract(hull, z);
    t.add({text, r.point.x(), r.point.y(), r.point.t(), r.carrier == Carrier::Face ? "face" : "edge", r.index,
           r.busemann});
  }
  t.write(out, g.format);
}

void dome_inj_radius(std::ostream& out, const Globals& g, const std::string& input, std::size_t face,
                     const std::vector<double>& weights, std::size_t depth, std::size_t max_tiles) {
  const HullPolyhedron hull = build_hull(parse_configuration(read_text_file(input)));
  if (face >= hull.faces().size()) throw Error(ErrorCode::InvalidPoint, "no face " + std::to_string(face));
  const PointH3 p = weights.empty() ? face_centroid(hull, face) : face_point(hull, face, weights);
  DevelopOptions options;
  options.max_depth = depth;
  options.max_tiles = max_tiles;
  const InjectivityEstimate est = dome_injectivity_radius(hull, face, p, options);
  ordered_json rec;
  rec["face"] = face;
  rec["x"] = p.x();
  rec["y"] = p.y();
  rec["t"] = p.t();
  rec["radius"] = est.radius;
  rec["loop_length"] = est.loop_length;
  rec["exact"] = est.exact;
  rec["tiles"] = est.tiles;
  rec["depth"] = est.depth;
  write_record(out, g.format, rec);
}

// -------------------------------------------------------------- lamination

void lamination_roundness(std::ostream& out, const Globals& g, const std::string& input, std::size_t samples) {
  const FiniteLamination lam = parse_lamination(read_text_file(input));
  const RoundnessWitness w = roundness_witness(lam);
  ordered_json rec;
  rec["leaves"] = lam.size();
  rec["roundness"] = w.value;
  rec["chain"] = w.chain;
  if (samples > 0) {
    rec["sampled"] = sampled_roundness(lam, samples, g.seed);
    rec["samples"] = samples;
    rec["seed"] = g.seed;
  }
  write_record(out, g.format, rec);
}

void lamination_validate(std::ostream& out, const Globals& g, const std::string& input) {
  const FiniteLamination lam = parse_lamination(read_text_file(input));
  validate(lam);
  ordered_json rec;
  rec["valid"] = true;
  rec["leaves"] = lam.size();
  write_record(out, g.format, rec);
}

// -------------------------------------------------------------- earthquake

void earthquake_trace(std::ostream& out, const Globals& g, const std::string& input, double x, double y,
                      std::size_t base, std::size_t samples) {
  const FiniteLamination lam = parse_lamination(read_text_file(input));
  const ComplexEarthquake ce(lam, Complex(x, y), base);
  Table t({"angle", "gap", "re", "im", "infinite"});
  for (double angle : grid(0.0, kTwoPi, samples + 1, false)) {
    if (angle >= kTwoPi) break;
    const ExtendedComplex w = ce.boundary_trace(angle);
    const std::size_t gap = ce.shear().gaps().gap_of_boundary(angle);
    t.add({angle, gap, w.is_infinite() ? ordered_json(nullptr) : ordered_json(w.value().real()),
           w.is_infinite() ? ordered_json(nullptr) : ordered_json(w.value().imag()), w.is_infinite()});
  }
  ordered_json meta;
  meta["x"] = x;
  meta["y"] = y;
  meta["base_gap"] = base;
  meta["in_T0"] = in_T0(Complex(x, y));
  t.write(out, g.format, meta);
}

// ---------------------------------------------------------------- crescent

void crescent_dilatation(std::ostream& out, const Globals& g, double w_re, double w_im, double theta,
                         std::size_t grid_n) {
  const AngleScaling scaling(Complex(w_re, w_im), theta);
  ordered_json rec;
  rec["w_re"] = w_re;
  rec["w_im"] = w_im;
  rec["theta"] = theta;
  rec["image_angle"] = scaling.image_angle();
  rec["K"] = scaling_dilatation(scaling);
  rec["abs_mu"] = scaling.beltrami_modulus();
  if (grid_n > 0) {
    const ScalingReport r = verify_scaling_dilatation(Complex(w_re, w_im), theta, grid_n,
                                                      static_cast<unsigned>(std::max(0, g.threads)));
    rec["grid"] = grid_n;
    rec["estimated_sup_K"] = r.stats.sup_K;
    rec["estimated_mean_K"] = r.stats.mean_K;
    rec["max_deviation"] = r.max_deviation;
    rec["cells"] = r.stats.cells;
    if (r.kappa_L) rec["L_kappa"] = *r.kappa_L;
  }
  write_record(out, g.format, rec);
}

// ---------------------------------------------------------------------- qc

void qc_estimate(std::ostream& out, const Globals& g, const std::string& fixture, std::size_t n, double parameter,
                 const std::string& dump) {
  const Fixture f = make_fixture(fixture, n, parameter);
  const BeltramiField field = beltrami_estimate(f.sample, static_cast<unsigned>(std::max(0, g.threads)));
  if (!dump.empty()) {
    std::ofstream d(dump);
    if (!d) throw Error(ErrorCode::ParseError, "cannot write '" + dump + "'");
    d << "x,y,mu_re,mu_im,K,flag\n";
    for (std::size_t k = 0; k < field.K.size(); ++k) {
      if (field.flags[k] == CellFlag::Masked) continue;
      d << format_double(field.points[k].real()) << ',' << format_double(field.points[k].imag()) << ','
        << format_double(field.mu[k].real()) << ',' << format_double(field.mu[k].imag()) << ','
        << format_double(field.K[k]) << ',' << static_cast<int>(field.flags[k]) << '\n';
    }
  }
  ordered_json rec;
  rec["fixture"] = fixture;
  rec["grid"] = n;
  rec["expected_K"] = number_or_null(f.expected_K);
  rec["orientation_reversing_cells"] = field.count(CellFlag::OrientationReversing);
  rec["degenerate_cells"] = field.count(CellFlag::DegenerateJacobian);
  if (field.count(CellFlag::Valid) > 0) {
    const DilatationStats st = dilatation_stats(field);
    rec["cells"] = st.cells;
    rec["sup_K"] = st.sup_K;
    rec["sup_at"] = point_json(st.sup_location);
    rec["mean_K"] = st.mean_K;
    rec["p50"] = st.p50;
    rec["p90"] = st.p90;
    rec["p99"] = st.p99;
    rec["sup_abs_mu"] = st.sup_abs_mu;
  } else {
    rec["cells"] = 0;
  }
  write_record(out, g.format, rec);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"domekit: domes, laminations, complex earthquakes and quasiconformal bounds"};
  app.name("domekit");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", g.seed, "Seed for sampled checks");
  app.add_option("--threads", g.threads, "Worker threads (default: DOMEKIT_THREADS or all cores)");

  std::function<void()> action;

  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds")->require_subcommand(1);
  std::optional<double> nu, nu_hat;
  auto* b_eval = bounds->add_subcommand("eval", "Evaluate every bound at nu and/or nu-hat");
  b_eval->add_option("--nu", nu, "Injectivity radius lower bound of the domain");
  b_eval->add_option("--nu-hat", nu_hat, "Injectivity radius lower bound of the dome");
  b_eval->callback([&] { action = [&] { bounds_eval(out, g, nu, nu_hat); }; });
  double nu_min = 0.01, nu_max = 10.0;
  std::size_t nu_points = 100;
  bool nu_linear = false;
  auto* b_table = bounds->add_subcommand("table", "Tabulate the bounds over a nu grid");
  b_table->add_option("--nu-min", nu_min);
  b_table->add_option("--nu-max", nu_max);
  b_table->add_option("--points", nu_points);
  b_table->add_flag("--linear", nu_linear, "Linear instead of logarithmic spacing");
  b_table->callback([&] { action = [&] { bounds_table(out, g, nu_min, nu_max, nu_points, nu_linear); }; });

  auto* annulus = app.add_subcommand("annulus", "Round annulus closed forms")->require_subcommand(1);
  double s_min = 0.1, s_max = 60.0;
  std::size_t s_points = 500;
  auto* a_table = annulus->add_subcommand("table", "Closed forms and bound verdicts over an s grid");
  a_table->add_option("--s-min", s_min);
  a_table->add_option("--s-max", s_max);
  a_table->add_option("--points", s_points);
  a_table->callback([&] { action = [&] { annulus_table(out, g, s_min, s_max, s_points); }; });

  auto* dome = app.add_subcommand("dome", "Domes of finite ideal configurations")->require_subcommand(1);
  std::string input, obj;
  std::size_t subdivisions = 8;
  auto* d_build = dome->add_subcommand("build", "Convex hull faces, edges and bending angles");
  d_build->add_option("--input", input, "Configuration JSON")->required();
  d_build->add_option("--obj", obj, "Also write a triangulated mesh (ball model)");
  d_build->add_option("--subdivisions", subdivisions);
  d_build->callback([&] { action = [&] { dome_build(out, g, input, obj, subdivisions); }; });
  std::vector<std::string> zs;
  auto* d_retract = dome->add_subcommand("retract", "Nearest point retraction");
  d_retract->add_option("--input", input, "Configuration JSON")->required();
  d_retract->add_option("--z", zs, "Point 're,im' or 'inf' (repeatable)")->required();
  d_retract->callback([&] { action = [&] { dome_retract(out, g, input, zs); }; });
  std::size_t face = 0, depth = 40, max_tiles = 200000;
  std::vector<double> weights;
  auto* d_inj = dome->add_subcommand("inj-radius", "Injectivity radius of the dome at a face point");
  d_inj->add_option("--input", input, "Configuration JSON")->required();
  d_inj->add_option("--face", face);
  d_inj->add_option("--weights", weights, "Barycentric weights of the point (default: centroid)")->delimiter(',');
  d_inj->add_option("--depth", depth);
  d_inj->add_option("--max-tiles", max_tiles);
  d_inj->callback([&] { action = [&] { dome_inj_radius(out, g, input, face, weights, depth, max_tiles); }; });

  auto* lamination = app.add_subcommand("lamination", "Finite measured laminations")->require_subcommand(1);
  std::size_t samples = 0;
  auto* l_round = lamination->add_subcommand("roundness", "Exact roundness and its witness chain");
  l_round->add_option("--input", input, "Lamination JSON")->required();
  l_round->add_option("--samples", samples, "Also sample this many random unit arcs");
  l_round->callback([&] { action = [&] { lamination_roundness(out, g, input, samples); }; });
  auto* l_validate = lamination->add_subcommand("validate", "Check disjointness and weights");
  l_validate->add_option("--input", input, "Lamination JSON")->required();
  l_validate->callback([&] { action = [&] { lamination_validate(out, g, input); }; });

  auto* quake = app.add_subcommand("earthquake", "Complex earthquakes")->require_subcommand(1);
  double x = 0.0, y = 0.0;
  std::size_t base = 0, trace_samples = 360;
  auto* q_trace = quake->add_subcommand("trace", "Boundary trace of CE_{x+iy}");
  q_trace->add_option("--input", input, "Lamination JSON")->required();
  q_trace->add_option("--x", x, "Shear (real) part");
  q_trace->add_option("--y", y, "Bending (imaginary) part");
  q_trace->add_option("--base", base, "Gap held fixed");
  q_trace->add_option("--samples", trace_samples);
  q_trace->callback([&] { action = [&] { earthquake_trace(out, g, input, x, y, base, trace_samples); }; });

  auto* crescent = app.add_subcommand("crescent", "Angle scalings of wedges")->require_subcommand(1);
  double w_re = 0.0, w_im = 0.0, theta = kPi / 2;
  std::size_t grid_n = 0;
  auto* c_dil = crescent->add_subcommand("dilatation", "Exact (and optionally grid) dilatation of S_w");
  c_dil->add_option("--w-re", w_re);
  c_dil->add_option("--w-im", w_im);
  c_dil->add_option("--theta", theta);
  c_dil->add_option("--grid", grid_n, "Also estimate on an N x N grid");
  c_dil->callback([&] { action = [&] { crescent_dilatation(out, g, w_re, w_im, theta, grid_n); }; });

  auto* qc = app.add_subcommand("qc", "Beltrami coefficient estimation")->require_subcommand(1);
  std::string fixture = "affine", dump;
  std::size_t qc_grid = 512;
  double parameter = 0.0;
  auto* qc_est = qc->add_subcommand("estimate", "Estimate the dilatation of a fixture map");
  qc_est->add_option("--fixture", fixture)->check(CLI::IsMember(fixture_names()));
  qc_est->add_option("--grid", qc_grid);
  qc_est->add_option("--parameter", parameter, "Fixture parameter (power exponent, scaling Im w)");
  qc_est->add_option("--dump-field", dump, "Write the per-cell field as CSV");
  qc_est->callback([&] { action = [&] { qc_estimate(out, g, fixture, qc_grid, parameter, dump); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  try {
    set_default_threads(resolve_threads(g.threads));
    if (action) action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace domekit::cli
