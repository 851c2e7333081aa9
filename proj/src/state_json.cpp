#include "qcorr/state_json.hpp"

#include <json.hpp>

namespace qcorr {

namespace {

using nlohmann::json;

Eigen::Vector3d parse_vec3(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3)
    throw StateJsonError(field + ": expected an array of 3 numbers");
  Eigen::Vector3d v;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_number())
      throw StateJsonError(field + "[" + std::to_string(i) + "]: expected a number");
    v[i] = j[i].get<double>();
  }
  return v;
}

double parse_number(const json& j, const std::string& field) {
  if (!j.is_number()) throw StateJsonError(field + ": expected a number");
  return j.get<double>();
}

TwoQubitDensity parse_matrix(const json& j) {
  if (!j.is_array() || j.size() != 4) throw StateJsonError("matrix: expected 4 rows");
  Eigen::Matrix4cd m;
  for (int r = 0; r < 4; ++r) {
    if (!j[r].is_array() || j[r].size() != 4)
      throw StateJsonError("matrix[" + std::to_string(r) + "]: expected 4 entries");
    for (int c = 0; c < 4; ++c) {
      const json& e = j[r][c];
      const std::string where = "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw StateJsonError(where + ": expected an [re, im] pair");
      m(r, c) = complexd(e[0].get<double>(), e[1].get<double>());
    }
  }
  return TwoQubitDensity(m);
}

}  // namespace

StateSpec parse_state_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StateJsonError(std::string("state json: ") + e.what());
  }
  if (!j.is_object())
    throw StateJsonError("state json: expected an object");
  const int keys = static_cast<int>(j.contains("bell_diag")) +
                   static_cast<int>(j.contains("deformed")) +
                   static_cast<int>(j.contains("matrix"));
  if (keys != 1)
    throw StateJsonError("state json: expected exactly one of bell_diag | deformed | matrix");

  if (j.contains("bell_diag")) {
    const BellDiag bd(parse_vec3(j["bell_diag"], "bell_diag"));
    require_physical(bd);
    return bd;
  }
  if (j.contains("deformed")) {
    const json& d = j["deformed"];
    if (!d.is_object()) throw StateJsonError("deformed: expected an object");
    if (!d.contains("r") || !d.contains("s") || !d.contains("c"))
      throw StateJsonError("deformed: expected fields r, s, c");
    const DeformedBellDiag state(parse_number(d["r"], "deformed.r"),
                                 parse_number(d["s"], "deformed.s"),
                                 parse_vec3(d["c"], "deformed.c"));
    require_physical(state);
    return state;
  }
  return parse_matrix(j["matrix"]);
}

TwoQubitDensity to_density(const StateSpec& spec) {
  if (const auto* bd = std::get_if<BellDiag>(&spec)) return bell_diag_to_density(*bd);
  if (const auto* d = std::get_if<DeformedBellDiag>(&spec)) return deformed_to_density(*d);
  return std::get<TwoQubitDensity>(spec);
}

}  // namespace qcorr
