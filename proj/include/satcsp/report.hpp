#pragma once
// Report emission for verification runs: a flat CSV table, a structured JSON
// document with embedded witnesses, and a line-oriented text summary. All
// three are deterministic functions of the verification result; reruns with
// identical options produce byte-identical output.

#include <string>

#include "satcsp/claims.hpp"
#include "satcsp/csp_io.hpp"

namespace satcsp {

inline std::string report_csv(const VerifyResult& result) {
  std::string out =
      "claim_id,instances,skipped,violations,strict_witnesses,"
      "incomparability_witnesses,convention,pass\n";
  for (const ClaimResult& c : result.claims) {
    out += c.id + "," + std::to_string(c.instances) + "," + std::to_string(c.skipped) + "," +
           std::to_string(c.violations) + "," + std::to_string(c.strict_witnesses) + "," +
           std::to_string(c.incomparability_witnesses) + "," + c.convention + "," +
           (c.pass ? "true" : "false") + "\n";
  }
  return out;
}

inline ordered_json report_structured(const VerifyResult& result) {
  ordered_json doc;
  ordered_json options;
  options["claims"] = result.options.claims;
  options["suite"] = result.options.suite;
  options["amo"] = result.options.amo;
  if (result.options.suite == "exhaustive") {
    ordered_json ex;
    ex["max_vars"] = result.options.max_vars;
    ex["max_clauses"] = result.options.max_clauses;
    ex["max_width"] = result.options.max_width;
    ex["csp_max_vars"] = result.options.csp_max_vars;
    ex["csp_max_domain"] = result.options.csp_max_domain;
    options["exhaustive"] = ex;
  } else {
    ordered_json rd;
    rd["count"] = result.options.random_count;
    rd["sat_vars"] = result.options.sat_vars;
    rd["sat_clauses"] = result.options.sat_clauses;
    rd["sat_width"] = result.options.sat_width;
    rd["bincsp_vars"] = result.options.bincsp_vars;
    rd["bincsp_domain"] = result.options.bincsp_domain;
    rd["bincsp_constraints"] = result.options.bincsp_constraints;
    rd["bincsp_tightness"] = result.options.bincsp_tightness;
    rd["seed"] = result.options.seed;
    options["random"] = rd;
  }
  doc["options"] = options;
  doc["sat_instances"] = result.sat_instances;
  doc["csp_instances"] = result.csp_instances;

  ordered_json cal;
  cal["performed"] = result.calibration_performed;
  cal["ok"] = result.calibration_ok;
  cal["convention"] = result.convention.to_string();
  cal["notes"] = result.calibration_notes;
  doc["calibration"] = cal;

  doc["claims"] = ordered_json::array();
  for (const ClaimResult& c : result.claims) {
    ordered_json entry;
    entry["id"] = c.id;
    entry["description"] = c.description;
    entry["instances"] = c.instances;
    entry["skipped"] = c.skipped;
    entry["violations"] = c.violations;
    entry["strict_witnesses"] = c.strict_witnesses;
    entry["incomparability_witnesses"] = c.incomparability_witnesses;
    entry["convention"] = c.convention;
    entry["pass"] = c.pass;
    entry["notes"] = c.notes;
    entry["witnesses"] = ordered_json::array();
    for (const ClaimWitness& w : c.witnesses) {
      ordered_json jw;
      jw["kind"] = w.kind;
      jw["instance_index"] = w.instance_index;
      jw["lhs"] = w.lhs;
      jw["rhs"] = w.rhs;
      jw["instance"] = w.instance;
      entry["witnesses"].push_back(jw);
    }
    doc["claims"].push_back(entry);
  }
  doc["all_pass"] = result.all_pass;
  return doc;
}

inline std::string report_text(const VerifyResult& result) {
  std::string out = "suite: " + result.options.suite +
                    " | formula instances: " + std::to_string(result.sat_instances) +
                    " | constraint instances: " + std::to_string(result.csp_instances) + "\n";
  if (result.calibration_performed)
    out += "calibration: convention=" + result.convention.to_string() +
           " ok=" + (result.calibration_ok ? "true" : "false") + "\n" + "  " +
           result.calibration_notes + "\n";
  else
    out += "calibration: " + result.calibration_notes + "\n";
  for (const ClaimResult& c : result.claims) {
    out += c.id + (c.id.size() == 2 ? "  " : " ");
    out += c.pass ? "PASS" : "FAIL";
    out += " instances=" + std::to_string(c.instances) + " skipped=" + std::to_string(c.skipped) +
           " violations=" + std::to_string(c.violations) +
           " strict=" + std::to_string(c.strict_witnesses) +
           " incomparable=" + std::to_string(c.incomparability_witnesses) +
           " convention=" + c.convention + "\n";
    if (!c.notes.empty()) out += "    " + c.notes + "\n";
  }
  int passed = 0;
  for (const ClaimResult& c : result.claims)
    if (c.pass) ++passed;
  out += "result: " + std::string(result.all_pass ? "PASS" : "FAIL") + " (" +
         std::to_string(passed) + "/" + std::to_string(result.claims.size()) + " claims)\n";
  return out;
}

}  // namespace satcsp
