#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ksnull/density.hpp"
#include "ksnull/ks.hpp"
#include "ksnull/sphere.hpp"

namespace ksnull {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kReportSchema = "ksnull-report/1";

using json = nlohmann::ordered_json;

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

/// Correctly rounded scientific rendering with `digits` significant digits,
/// e.g. "-9.60000000000e-01". Zero renders as "0".
std::string to_decimal(const Rat& q, int digits = 12);

// Exact values travel as decimal strings ("p" or "p/q") so that parsing a
// report gives back the same numbers bit for bit.

json to_json(const SpherePoint& p);
SpherePoint sphere_point_from_json(const json& j);

json to_json(const RationalRotation& r);
RationalRotation rotation_from_json(const json& j);

json to_json(const ApproxWitness& w);
ApproxWitness witness_from_json(const json& j);

json to_json(const TriadApproximation& t);
TriadApproximation triad_approximation_from_json(const json& j);

json to_json(const ApproxTarget& t);

json to_json(const SearchResult& r, const OrthoGraph& g);
json to_json(const NullificationReport& r, const OrthoGraph& g);

struct InputDigest {
    std::string path;
    std::string sha256;
};

/// Report envelope shared by every CLI command.
json make_report(std::string_view command, const std::vector<std::string>& argv,
                 const std::vector<InputDigest>& inputs, json results, double elapsed_ms);

} // namespace ksnull
