#include "tspsurf/milp.hpp"

#include <map>

#include "json.hpp"

namespace tspsurf {

namespace {

const char* role_name(VarRole::Kind k) {
  switch (k) {
    case VarRole::Kind::TRIANGLE: return "x";
    case VarRole::Kind::EDGE: return "y";
    case VarRole::Kind::INCIDENCE: return "z";
    case VarRole::Kind::ARC: return "a";
    case VarRole::Kind::FLOW: return "f";
    case VarRole::Kind::ROOT: return "r";
    case VarRole::Kind::LEVEL: return "u";
    case VarRole::Kind::DUAL_EDGE: return "w";
    case VarRole::Kind::DIRECTED: return "xd";
    case VarRole::Kind::CITY_LEVEL: return "uc";
    case VarRole::Kind::OTHER: return "other";
  }
  return "other";
}

} // namespace

int MilpModel::add_variable(const std::string& name, VarKind kind,
                            double lower, double upper, double objective,
                            VarRole role) {
  vars_.push_back({name, kind, lower, upper, objective, role});
  return static_cast<int>(vars_.size()) - 1;
}

void MilpModel::add_constraint(const std::string& name,
                               std::vector<std::pair<int, double>> terms,
                               Sense sense, double rhs) {
  for (const auto& [v, c] : terms)
    if (v < 0 || v >= static_cast<int>(vars_.size()))
      throw TspError(ErrorCode::InvalidArgument,
                     "constraint " + name + " references unknown variable");
  cons_.push_back({name, std::move(terms), sense, rhs});
}

int MilpModel::variable_index(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(vars_.size()); ++i)
    if (vars_[i].name == name) return i;
  return -1;
}

std::string MilpModel::decode_map_json() const {
  nlohmann::json j;
  j["builder"] = builder;
  j["instance"] = instance;
  auto& map = j["variables"];
  for (const auto& v : vars_) {
    nlohmann::json entry;
    entry["role"] = role_name(v.role.kind);
    if (v.role.t >= 0) entry["t"] = v.role.t;
    if (v.role.i >= 0) entry["i"] = v.role.i;
    if (v.role.j >= 0) entry["j"] = v.role.j;
    map[v.name] = entry;
  }
  return j.dump(2);
}

} // namespace tspsurf
