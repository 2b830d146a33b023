#include "domekit/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace domekit {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

void check_schema(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "expected a JSON object");
  if (doc.contains("schema") && doc["schema"] != kSchema) {
    throw Error(ErrorCode::ParseError, "unsupported schema " + doc["schema"].dump());
  }
}

json point_json(const ExtendedComplex& z) {
  if (z.is_infinite()) return "inf";
  return json::array({z.value().real(), z.value().imag()});
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return {buf, res.ptr};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FiniteLamination parse_lamination(std::string_view json_text) {
  const json doc = parse(json_text);
  check_schema(doc);
  try {
    std::vector<GeodesicH2> leaves;
    for (const auto& leaf : doc.at("leaves")) {
      if (leaf.size() != 2) throw Error(ErrorCode::ParseError, "a leaf is a pair of angles");
      leaves.emplace_back(leaf[0].get<double>(), leaf[1].get<double>());
    }
    return {std::move(leaves), doc.at("weights").get<std::vector<double>>()};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string lamination_to_json(const FiniteLamination& lamination) {
  json doc;
  doc["schema"] = kSchema;
  doc["leaves"] = json::array();
  for (const auto& leaf : lamination.leaves()) {
    doc["leaves"].push_back({leaf.first().angle(), leaf.second().angle()});
  }
  doc["weights"] = lamination.weights();
  return doc.dump(2);
}

IdealConfiguration parse_configuration(std::string_view json_text) {
  const json doc = parse(json_text);
  check_schema(doc);
  try {
    std::vector<ExtendedComplex> points;
    for (const auto& p : doc.at("points")) {
      if (p.is_string()) {
        if (p != "inf") throw Error(ErrorCode::ParseError, "points are [re, im] or \"inf\"");
        points.push_back(ExtendedComplex::infinity());
      } else {
        if (p.size() != 2) throw Error(ErrorCode::ParseError, "points are [re, im] or \"inf\"");
        points.emplace_back(Complex(p[0].get<double>(), p[1].get<double>()));
      }
    }
    return IdealConfiguration(std::move(points));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string configuration_to_json(const IdealConfiguration& config) {
  json doc;
  doc["schema"] = kSchema;
  doc["points"] = json::array();
  for (const auto& p : config.points()) doc["points"].push_back(point_json(p));
  return doc.dump(2);
}

std::string hull_to_json(const HullPolyhedron& hull) {
  json doc;
  doc["schema"] = kSchema;
  doc["points"] = json::array();
  for (const auto& p : hull.config().points()) doc["points"].push_back(point_json(p));
  doc["degenerate"] = hull.degenerate();
  doc["euler_characteristic"] = hull.euler_characteristic();
  doc["convexity_violation"] = hull.convexity_violation();
  doc["faces"] = json::array();
  for (const auto& f : hull.faces()) {
    json face;
    face["vertices"] = f.vertices;
    face["normal"] = f.normal;
    face["offset"] = f.offset;
    const GeneralizedCircle& c = f.plane.boundary();
    if (c.is_line()) {
      face["boundary"] = {{"line", {{"point", {c.point().real(), c.point().imag()}},
                                    {"direction", {c.direction().real(), c.direction().imag()}}}}};
    } else {
      face["boundary"] = {{"circle", {{"center", {c.center().real(), c.center().imag()}}, {"radius", c.radius()}}}};
    }
    doc["faces"].push_back(face);
  }
  doc["edges"] = json::array();
  for (const auto& e : hull.edges()) {
    doc["edges"].push_back(
        {{"vertices", {e.v0, e.v1}}, {"faces", {e.face0, e.face1}}, {"angle", e.angle}, {"fold", e.fold}});
  }
  doc["bending"] = json::array();
  for (const auto& b : bending_lamination(hull)) {
    doc["bending"].push_back({{"edge", b.edge}, {"weight", b.weight}});
  }
  return doc.dump(2);
}

}  // namespace domekit
