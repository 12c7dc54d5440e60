#pragma once
// Sidecar metadata written next to every encoding output. It records how the
// encoded instance's variables relate to the original instance's, enough to
// translate solutions back. Serialized as JSON with stable key order.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "satcsp/cnf.hpp"
#include "satcsp/csp.hpp"

namespace satcsp {

struct EncodingMap {
  std::string direction;  // "sat_to_csp" | "csp_to_sat"
  std::string encoding;   // dual|hidden|literal|nonbinary|direct|log|support
  int num_original_vars = 0;

  // sat_to_csp tables (values are CSP variable ids):
  std::vector<int> clause_var;  // per clause: the CSP variable standing for it
  std::vector<int> prop_var;    // per original SAT var 1..n (index v-1): its CSP variable
  std::vector<std::vector<int>> clause_scope;     // per clause: SAT vars in first-occurrence order
  std::vector<std::vector<int>> clause_literals;  // per clause: literal codes in clause order

  // csp_to_sat tables (values are 1-based SAT variables):
  std::vector<std::vector<int>> selector;  // [var][value] -> SAT var
  std::vector<std::vector<int>> bits;      // [var][bit] -> SAT var, least significant first
  std::string amo;                         // "none" | "pairwise" | ""
};

inline nlohmann::ordered_json encoding_map_to_json(const EncodingMap& m) {
  nlohmann::ordered_json j;
  j["direction"] = m.direction;
  j["encoding"] = m.encoding;
  j["num_original_vars"] = m.num_original_vars;
  j["clause_var"] = m.clause_var;
  j["prop_var"] = m.prop_var;
  j["clause_scope"] = m.clause_scope;
  j["clause_literals"] = m.clause_literals;
  j["selector"] = m.selector;
  j["bits"] = m.bits;
  j["amo"] = m.amo;
  return j;
}

inline EncodingMap encoding_map_from_json(const nlohmann::ordered_json& j) {
  EncodingMap m;
  m.direction = j.at("direction").get<std::string>();
  m.encoding = j.at("encoding").get<std::string>();
  m.num_original_vars = j.at("num_original_vars").get<int>();
  m.clause_var = j.at("clause_var").get<std::vector<int>>();
  m.prop_var = j.at("prop_var").get<std::vector<int>>();
  m.clause_scope = j.at("clause_scope").get<std::vector<std::vector<int>>>();
  m.clause_literals = j.at("clause_literals").get<std::vector<std::vector<int>>>();
  m.selector = j.at("selector").get<std::vector<std::vector<int>>>();
  m.bits = j.at("bits").get<std::vector<std::vector<int>>>();
  m.amo = j.at("amo").get<std::string>();
  return m;
}

// Translates a solution of an encoded CSP back to a SAT assignment over the
// original variables. Variables constrained by no clause default to false.
// Inconsistent tuple coordinates (which a correct encoding cannot produce)
// raise an error rather than being papered over.
inline Assignment decode_sat_assignment(const EncodingMap& m, const Csp& encoded,
                                        const std::vector<int>& csp_solution) {
  if (m.direction != "sat_to_csp")
    throw std::invalid_argument("map does not describe a sat_to_csp encoding");
  Assignment a(m.num_original_vars);
  auto set_checked = [&](int var, bool value) {
    if (a.assigned(var)) {
      if (a.value(var) != value)
        throw std::runtime_error("encoded solution assigns both truth values to one variable");
      return;
    }
    a.set(var, value);
  };

  if (m.encoding == "dual" || m.encoding == "hidden") {
    if (m.encoding == "hidden")
      for (int v = 1; v <= m.num_original_vars; ++v) {
        int cv = m.prop_var[static_cast<size_t>(v - 1)];
        if (cv < 0) continue;
        const std::string& label =
            encoded.variables[static_cast<size_t>(cv)].domain[static_cast<size_t>(
                csp_solution[static_cast<size_t>(cv)])];
        set_checked(v, label == "T");
      }
    for (size_t i = 0; i < m.clause_var.size(); ++i) {
      int cv = m.clause_var[i];
      const std::string& label = encoded.variables[static_cast<size_t>(cv)]
                                     .domain[static_cast<size_t>(csp_solution[static_cast<size_t>(cv)])];
      const std::vector<int>& scope = m.clause_scope[i];
      if (label.size() != scope.size())
        throw std::runtime_error("tuple label length does not match clause scope");
      for (size_t k = 0; k < scope.size(); ++k) set_checked(scope[k], label[k] == 'T');
    }
  } else if (m.encoding == "literal") {
    for (size_t i = 0; i < m.clause_var.size(); ++i) {
      int cv = m.clause_var[i];
      int code = m.clause_literals[i][static_cast<size_t>(csp_solution[static_cast<size_t>(cv)])];
      set_checked(code < 0 ? -code : code, code > 0);
    }
  } else if (m.encoding == "nonbinary") {
    for (int v = 1; v <= m.num_original_vars; ++v) {
      int cv = m.prop_var[static_cast<size_t>(v - 1)];
      if (cv < 0) continue;
      const std::string& label =
          encoded.variables[static_cast<size_t>(cv)].domain[static_cast<size_t>(
              csp_solution[static_cast<size_t>(cv)])];
      set_checked(v, label == "T");
    }
  } else {
    throw std::invalid_argument("unknown sat_to_csp encoding: " + m.encoding);
  }

  for (int v = 1; v <= m.num_original_vars; ++v)
    if (!a.assigned(v)) a.set(v, false);
  return a;
}

// Translates a SAT model of an encoded formula back to a solution of the
// original CSP, and verifies it. Selector encodings pick the lowest-index
// true selector per variable; the bitwise encoding reads each variable's bits.
inline std::vector<int> decode_csp_solution(const EncodingMap& m, const Csp& original,
                                            const Assignment& model) {
  if (m.direction != "csp_to_sat")
    throw std::invalid_argument("map does not describe a csp_to_sat encoding");
  std::vector<int> sol(static_cast<size_t>(m.num_original_vars), -1);

  if (m.encoding == "direct" || m.encoding == "support") {
    for (int v = 0; v < m.num_original_vars; ++v) {
      const std::vector<int>& sel = m.selector[static_cast<size_t>(v)];
      for (size_t a = 0; a < sel.size(); ++a)
        if (model.assigned(sel[a]) && model.value(sel[a])) {
          sol[static_cast<size_t>(v)] = static_cast<int>(a);
          break;
        }
      if (sol[static_cast<size_t>(v)] < 0)
        throw std::runtime_error("model selects no value for a variable");
    }
  } else if (m.encoding == "log") {
    for (int v = 0; v < m.num_original_vars; ++v) {
      const std::vector<int>& bv = m.bits[static_cast<size_t>(v)];
      int value = 0;
      for (size_t j = 0; j < bv.size(); ++j)
        if (model.assigned(bv[j]) && model.value(bv[j])) value |= 1 << j;
      if (value >= original.variables[static_cast<size_t>(v)].domain_size())
        throw std::runtime_error("model decodes to an index outside the domain");
      sol[static_cast<size_t>(v)] = value;
    }
  } else {
    throw std::invalid_argument("unknown csp_to_sat encoding: " + m.encoding);
  }

  if (!check_solution(original, sol))
    throw std::logic_error("decoded assignment violates the original constraints");
  return sol;
}

}  // namespace satcsp
