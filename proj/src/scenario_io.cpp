// SPDX-License-Identifier: Apache-2.0

#include "irs/scenario_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "irs/errors.hpp"

namespace irs {

namespace {

using nlohmann::json;

void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": expected a JSON object");
}

void reject_unknown_keys(const json& j, const std::string& where,
                         std::initializer_list<std::string_view> allowed) {
  for (const auto& item : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      throw ValidationError(where + ": unknown key \"" + item.key() + "\"");
    }
  }
}

const json& required(const json& j, const std::string& key, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) throw ValidationError(where + ": missing key \"" + key + "\"");
  return *it;
}

double read_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ValidationError(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ValidationError(where + ": must be finite");
  return v;
}

int read_positive_int(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1 || j.get<long long>() > 1'000'000) {
    throw ValidationError(where + ": expected a positive integer");
  }
  return j.get<int>();
}

Vec3 read_vec3(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) throw ValidationError(where + ": expected [x, y, z]");
  return {read_number(j[0], where + "[0]"), read_number(j[1], where + "[1]"),
          read_number(j[2], where + "[2]")};
}

double optional_number(const json& j, const std::string& key, double fallback,
                       const std::string& where) {
  const auto it = j.find(key);
  return it == j.end() ? fallback : read_number(*it, where + "." + key);
}

json vec3_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

}  // namespace

Scenario parse_scenario(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario: ") + e.what());
  }
  require_object(root, "scenario");
  reject_unknown_keys(root, "scenario",
                      {"bs", "gt", "airspace", "array", "pattern", "budget",
                       "allow_elevated_terminals"});

  Scenario s;
  s.bs = read_vec3(required(root, "bs", "scenario"), "bs");
  s.gt = read_vec3(required(root, "gt", "scenario"), "gt");
  if (const auto it = root.find("allow_elevated_terminals"); it != root.end()) {
    if (!it->is_boolean()) throw ValidationError("allow_elevated_terminals: expected a boolean");
    s.allow_elevated_terminals = it->get<bool>();
  }

  const json& airspace = required(root, "airspace", "scenario");
  require_object(airspace, "airspace");
  reject_unknown_keys(airspace, "airspace", {"min", "max"});
  s.airspace.min = read_vec3(required(airspace, "min", "airspace"), "airspace.min");
  s.airspace.max = read_vec3(required(airspace, "max", "airspace"), "airspace.max");
  s.airspace.validate();

  const json& array = required(root, "array", "scenario");
  require_object(array, "array");
  reject_unknown_keys(array, "array", {"nx", "ny", "dx", "dy"});
  s.array = build_upa_offsets(read_positive_int(required(array, "nx", "array"), "array.nx"),
                              read_positive_int(required(array, "ny", "array"), "array.ny"),
                              read_number(required(array, "dx", "array"), "array.dx"),
                              read_number(required(array, "dy", "array"), "array.dy"));

  const json& pattern = required(root, "pattern", "scenario");
  require_object(pattern, "pattern");
  reject_unknown_keys(pattern, "pattern", {"q"});
  s.pattern = PatternParams::with_directivity(read_number(required(pattern, "q", "pattern"), "pattern.q"));

  if (const auto it = root.find("budget"); it != root.end()) {
    require_object(*it, "budget");
    reject_unknown_keys(*it, "budget", {"beta0", "lambda_c", "p_b_dbm", "sigma2"});
    const LinkBudget defaults;
    s.budget.beta0 = optional_number(*it, "beta0", defaults.beta0, "budget");
    s.budget.lambda_c = optional_number(*it, "lambda_c", defaults.lambda_c, "budget");
    s.budget.p_b = dbm_to_watts(optional_number(*it, "p_b_dbm", 30.0, "budget"));
    s.budget.sigma2 = optional_number(*it, "sigma2", defaults.sigma2, "budget");
  }

  s.validate();
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("scenario: cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

nlohmann::ordered_json scenario_to_json(const Scenario& s) {
  nlohmann::ordered_json j;
  j["bs"] = vec3_json(s.bs);
  j["gt"] = vec3_json(s.gt);
  j["airspace"] = {{"min", vec3_json(s.airspace.min)}, {"max", vec3_json(s.airspace.max)}};
  j["array"] = {{"nx", s.array.nx}, {"ny", s.array.ny}, {"dx", s.array.dx}, {"dy", s.array.dy}};
  j["pattern"] = {{"q", s.pattern.q}, {"g0", s.pattern.g0}};
  j["budget"] = {{"beta0", s.budget.beta0},
                 {"lambda_c", s.budget.lambda_c},
                 {"p_b_dbm", watts_to_dbm(s.budget.p_b)},
                 {"sigma2", s.budget.sigma2}};
  j["allow_elevated_terminals"] = s.allow_elevated_terminals;
  j["chi0"] = chi0(s);
  j["dmin"] = compute_dmin(s);
  return j;
}

}  // namespace irs
