#pragma once

// JSON and CSV plumbing. Every JSON document carries "schema": "domekit/1".

#include <string>
#include <string_view>

#include "domekit/dome.hpp"
#include "domekit/lamination.hpp"

namespace domekit {

inline constexpr const char* kSchema = "domekit/1";

/// Shortest round-trip form with at most 17 significant digits, '.' decimal.
std::string format_double(double x);

/// Reads a whole file; throws ParseError if it cannot be opened.
std::string read_text_file(const std::string& path);

/// {"leaves": [[theta1, theta2], ...], "weights": [w, ...]}
FiniteLamination parse_lamination(std::string_view json_text);
std::string lamination_to_json(const FiniteLamination& lamination);

/// {"points": [[re, im] | "inf", ...]}
IdealConfiguration parse_configuration(std::string_view json_text);
std::string configuration_to_json(const IdealConfiguration& config);

/// Faces, edges and bending angles of a hull.
std::string hull_to_json(const HullPolyhedron& hull);

}  // namespace domekit
