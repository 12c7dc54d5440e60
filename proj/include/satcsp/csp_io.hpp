#pragma once
// JSON serialization for CSP instances and encoding maps, plus small file
// helpers. The on-disk format uses value labels (strings), not indices:
//
// {
//   "variables":   [ {"id": 0, "domain": ["a", "b"]}, ... ],
//   "constraints": [ {"scope": [0, 1], "semantics": "allows",
//                     "tuples": [["a", "b"], ...]}, ... ]
// }
//
// Writers emit canonical output: 2-space indentation, keys in the order shown
// above, tuples sorted by value index, and a trailing newline. Reading a
// canonically written file and writing it again reproduces it byte for byte.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "satcsp/csp.hpp"
#include "satcsp/encoding_map.hpp"

namespace satcsp {

using ordered_json = nlohmann::ordered_json;

inline ordered_json csp_to_json(const Csp& p) {
  p.validate();
  ordered_json j;
  j["variables"] = ordered_json::array();
  for (const CspVariable& v : p.variables) {
    ordered_json jv;
    jv["id"] = v.id;
    jv["domain"] = v.domain;
    j["variables"].push_back(std::move(jv));
  }
  j["constraints"] = ordered_json::array();
  for (const ExtensionalConstraint& c : p.constraints) {
    ordered_json jc;
    jc["scope"] = c.scope;
    jc["semantics"] = c.semantics == Semantics::allows ? "allows" : "forbids";
    ordered_json tuples = ordered_json::array();
    for (const std::vector<int>& t : c.tuples) {
      ordered_json labels = ordered_json::array();
      for (size_t i = 0; i < t.size(); ++i) {
        const CspVariable& var = p.variables[static_cast<size_t>(c.scope[i])];
        labels.push_back(var.domain[static_cast<size_t>(t[i])]);
      }
      tuples.push_back(std::move(labels));
    }
    jc["tuples"] = std::move(tuples);
    j["constraints"].push_back(std::move(jc));
  }
  return j;
}

namespace detail {

inline int label_index(const CspVariable& v, const std::string& label) {
  for (size_t i = 0; i < v.domain.size(); ++i)
    if (v.domain[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("csp json: value \"" + label + "\" is not in the domain of variable " +
                              std::to_string(v.id));
}

}  // namespace detail

inline Csp csp_from_json(const ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("csp json: top level must be an object");
  if (!j.contains("variables") || !j["variables"].is_array())
    throw std::invalid_argument("csp json: missing \"variables\" array");
  if (!j.contains("constraints") || !j["constraints"].is_array())
    throw std::invalid_argument("csp json: missing \"constraints\" array");

  Csp p;
  for (const auto& jv : j["variables"]) {
    if (!jv.is_object() || !jv.contains("id") || !jv.contains("domain"))
      throw std::invalid_argument("csp json: each variable needs \"id\" and \"domain\"");
    if (!jv["id"].is_number_integer())
      throw std::invalid_argument("csp json: variable id must be an integer");
    if (!jv["domain"].is_array())
      throw std::invalid_argument("csp json: variable domain must be an array of strings");
    CspVariable v;
    v.id = jv["id"].get<int>();
    for (const auto& label : jv["domain"]) {
      if (!label.is_string())
        throw std::invalid_argument("csp json: domain values must be strings");
      v.domain.push_back(label.get<std::string>());
    }
    p.variables.push_back(std::move(v));
  }
  for (size_t i = 0; i < p.variables.size(); ++i)
    if (p.variables[i].id != static_cast<int>(i))
      throw std::invalid_argument("csp json: variable ids must be 0..n-1 in order");

  for (const auto& jc : j["constraints"]) {
    if (!jc.is_object() || !jc.contains("scope") || !jc.contains("semantics") ||
        !jc.contains("tuples"))
      throw std::invalid_argument("csp json: each constraint needs \"scope\", \"semantics\", \"tuples\"");
    if (!jc["scope"].is_array())
      throw std::invalid_argument("csp json: constraint scope must be an array of variable ids");
    std::vector<int> scope;
    for (const auto& s : jc["scope"]) {
      if (!s.is_number_integer())
        throw std::invalid_argument("csp json: scope entries must be integers");
      int id = s.get<int>();
      if (id < 0 || id >= static_cast<int>(p.variables.size()))
        throw std::invalid_argument("csp json: scope references unknown variable " + std::to_string(id));
      scope.push_back(id);
    }
    std::string sem_text;
    if (jc["semantics"].is_string()) sem_text = jc["semantics"].get<std::string>();
    Semantics sem;
    if (sem_text == "allows")
      sem = Semantics::allows;
    else if (sem_text == "forbids")
      sem = Semantics::forbids;
    else
      throw std::invalid_argument("csp json: semantics must be \"allows\" or \"forbids\"");
    if (!jc["tuples"].is_array())
      throw std::invalid_argument("csp json: constraint tuples must be an array");
    std::vector<std::vector<int>> tuples;
    for (const auto& jt : jc["tuples"]) {
      if (!jt.is_array() || jt.size() != scope.size())
        throw std::invalid_argument("csp json: each tuple must list one value per scope variable");
      std::vector<int> t;
      for (size_t i = 0; i < scope.size(); ++i) {
        if (!jt[i].is_string())
          throw std::invalid_argument("csp json: tuple values must be strings");
        t.push_back(detail::label_index(p.variables[static_cast<size_t>(scope[i])],
                                        jt[i].get<std::string>()));
      }
      tuples.push_back(std::move(t));
    }
    add_constraint(p, scope, sem, std::move(tuples));
  }
  p.validate();
  return p;
}

// ---------------------------------------------------------------------------
// File helpers
// ---------------------------------------------------------------------------

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::string csp_to_text(const Csp& p) { return csp_to_json(p).dump(2) + "\n"; }

inline Csp csp_from_text(const std::string& text) {
  return csp_from_json(ordered_json::parse(text));
}

inline std::string encoding_map_to_text(const EncodingMap& m) {
  return encoding_map_to_json(m).dump(2) + "\n";
}

inline EncodingMap encoding_map_from_text(const std::string& text) {
  return encoding_map_from_json(ordered_json::parse(text));
}

}  // namespace satcsp
