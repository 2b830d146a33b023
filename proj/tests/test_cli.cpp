#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = domekit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DOMEKIT_EXAMPLES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("annulus table") {
  const Result csv = run({"--format", "csv", "annulus", "table", "--s-min", "1", "--s-max", "50", "--points", "10"});
  REQUIRE(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    CHECK(std::count(line.begin(), line.end(), ',') == 11);
    if (rows > 0) CHECK(line.substr(line.size() - 14) == "true,true,true");
    ++rows;
  }
  CHECK(rows == 11);
  const Result js = run({"annulus", "table", "--points", "10"});
  REQUIRE(js.code == 0);
  const json doc = json::parse(js.out);
  CHECK(doc.at("schema") == "domekit/1");
  CHECK(doc.at("rows").size() == 10);
  CHECK(doc.at("rows").at(0).size() == 12);
}

TEST_CASE("bounds eval") {
  const Result r = run({"bounds", "eval", "--nu", "0.5"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("lower_bound_K").is_null());
  CHECK(doc.contains("lower_bound_K_reason"));
  CHECK(doc.at("M_chain") == true);
  const Result both = run({"bounds", "eval", "--nu", "0.2", "--nu-hat", "0.3"});
  REQUIRE(both.code == 0);
  CHECK(json::parse(both.out).at("lower_bound_K").is_number());
  CHECK(run({"bounds", "eval"}).code == 1);
  CHECK(run({"bounds", "eval", "--nu", "-1"}).code == 1);
}

TEST_CASE("dome commands") {
  const Result square = run({"dome", "build", "--input", data("square.json")});
  REQUIRE(square.code == 0);
  CHECK(json::parse(square.out).at("degenerate") == true);
  const Result tet = run({"dome", "build", "--input", data("tetrahedron.json")});
  REQUIRE(tet.code == 0);
  CHECK(json::parse(tet.out).at("degenerate") == false);
  const Result retract = run({"--format", "csv", "dome", "retract", "--input", data("tetrahedron.json"), "--z", "0.4,0.3",
                              "--z", "-2,-2"});
  REQUIRE(retract.code == 0);
  CHECK(std::count(retract.out.begin(), retract.out.end(), '\n') == 3);
  CHECK(run({"dome", "retract", "--input", data("tetrahedron.json"), "--z", "1,0"}).code == 1);
  CHECK(run({"dome", "build", "--input", data("broken.json")}).code == 1);
  CHECK(run({"dome", "build", "--input", data("missing.json")}).code == 1);
}

TEST_CASE("lamination commands") {
  const Result round = run({"lamination", "roundness", "--input", data("two_leaves.json")});
  REQUIRE(round.code == 0);
  CHECK(json::parse(round.out).at("schema") == "domekit/1");
  CHECK(run({"lamination", "validate", "--input", data("crossing.json")}).code == 1);
  CHECK(run({"lamination", "validate", "--input", data("two_leaves.json")}).code == 0);
  const Result trace = run({"earthquake", "trace", "--input", data("two_leaves.json"), "--y", "0.5", "--samples", "16"});
  REQUIRE(trace.code == 0);
  CHECK(json::parse(trace.out).at("rows").size() == 16);
}

TEST_CASE("usage errors and determinism") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--format", "xml", "annulus", "table"}).code == 2);
  CHECK(run({"bounds", "eval", "--nu", "abc"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const std::vector<std::string> args{"--seed", "5", "lamination", "roundness", "--input", data("two_leaves.json"),
                                      "--samples", "2000"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> qc{"qc", "estimate", "--fixture", "affine", "--grid", "32"};
  const Result a = run(qc);
  REQUIRE(a.code == 0);
  CHECK(a.out == run(qc).out);
  CHECK(run({"crescent", "dilatation", "--w-im", "3", "--theta", "1.5707963267948966"}).code == 1);
}
