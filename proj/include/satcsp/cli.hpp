#pragma once
// Command-line interface. `run_cli` takes the argument vector (without the
// program name) plus output streams, so the whole surface is testable
// in-process; the binary's main is a two-line wrapper.
//
// Exit codes: 0 = success (an unsatisfiable instance is still a successful
// run), 1 = a verification run with failing claims or an internal error,
// 2 = usage or input errors (bad flags, malformed files).

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "satcsp/claims.hpp"
#include "satcsp/report.hpp"

namespace satcsp {

namespace detail {

inline bool looks_like_json(const std::string& text) {
  for (char ch : text)
    if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') return ch == '{';
  return false;
}

inline Cnf load_cnf(const std::string& path) {
  std::string text = read_text_file(path);
  if (looks_like_json(text))
    throw std::invalid_argument("expected a DIMACS formula, got JSON: " + path);
  return read_dimacs(text);
}

inline Csp load_csp(const std::string& path) {
  std::string text = read_text_file(path);
  if (!looks_like_json(text))
    throw std::invalid_argument("expected a JSON constraint problem: " + path);
  return csp_from_text(text);
}

inline void print_sat_stats(std::ostream& out, const SearchStats& s) {
  out << "status: " << (s.sat ? "sat" : "unsat") << "\n"
      << "decisions_total: " << s.decisions_total << "\n"
      << "decisions_positive: " << s.decisions_positive << "\n"
      << "decisions_negative: " << s.decisions_negative << "\n"
      << "nodes: " << s.nodes << "\n"
      << "failed_leaves: " << s.failed_leaves << "\n"
      << "propagations: " << s.propagations << "\n";
  if (s.sat && s.model) {
    out << "model:";
    for (int v = 1; v <= s.model->num_vars(); ++v) out << " " << (s.model->value(v) ? v : -v);
    out << "\n";
  }
}

inline void print_csp_stats(std::ostream& out, const Csp& p, const CspSearchStats& s) {
  out << "status: " << (s.sat ? "sat" : "unsat") << "\n"
      << "branches: " << s.branches << "\n"
      << "choice_branches: " << s.choice_branches << "\n"
      << "nodes: " << s.nodes << "\n"
      << "failed_leaves: " << s.failed_leaves << "\n"
      << "revisions: " << s.revisions << "\n";
  if (s.sat && s.solution) {
    out << "solution:";
    for (int v = 0; v < p.num_vars(); ++v)
      out << " " << p.variables[static_cast<size_t>(v)]
                        .domain[static_cast<size_t>((*s.solution)[static_cast<size_t>(v)])];
    out << "\n";
  }
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bidirectional encodings between propositional satisfiability and binary "
               "constraint problems, with matched propagation and search laboratories.",
               "satcsp"};
  app.require_subcommand(1);

  // encode ------------------------------------------------------------------
  CLI::App* encode = app.add_subcommand("encode", "Translate an instance across formalisms");
  std::string enc_from, enc_to, enc_name, enc_amo = "none", enc_in, enc_out;
  encode->add_option("--from", enc_from, "Source formalism: sat or csp")->required();
  encode->add_option("--to", enc_to, "Target formalism: csp or sat")->required();
  encode
      ->add_option("--encoding", enc_name,
                   "dual|hidden|literal|nonbinary (sat->csp) or direct|log|support (csp->sat)")
      ->required();
  encode->add_option("--amo", enc_amo, "At-most-one clauses for the direct encoding")
      ->check(CLI::IsMember({"none", "pairwise"}));
  encode->add_option("input", enc_in, "Input file (DIMACS or CSP JSON)")->required();
  encode->add_option("-o,--output", enc_out, "Output file; the mapping goes to <output>.map")
      ->required();

  // solve -------------------------------------------------------------------
  CLI::App* solve = app.add_subcommand("solve", "Run a backtracking solver with a static order");
  std::string solve_solver, solve_order = "static", solve_in;
  solve->add_option("--solver", solve_solver, "dp (formulas) or fc|mac (constraint problems)")
      ->required()
      ->check(CLI::IsMember({"dp", "fc", "mac"}));
  solve->add_option("--order", solve_order, "Branching order discipline")
      ->check(CLI::IsMember({"static"}));
  solve->add_option("input", solve_in, "Input file")->required();

  // propagate ---------------------------------------------------------------
  CLI::App* propagate = app.add_subcommand("propagate", "Run root propagation to a fixpoint");
  std::string prop_method, prop_in;
  propagate->add_option("--method", prop_method, "up (formulas) or ac3|gac (constraint problems)")
      ->required()
      ->check(CLI::IsMember({"up", "ac3", "gac"}));
  propagate->add_option("input", prop_in, "Input file")->required();

  // gen ---------------------------------------------------------------------
  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  std::string gen_kind, gen_out;
  int gen_vars = 0, gen_clauses = 0, gen_width = 3, gen_constraints = 0, gen_domain = 3;
  double gen_tightness = 0.4;
  uint64_t gen_seed = 1;
  gen->add_option("--kind", gen_kind, "ksat or bincsp")
      ->required()
      ->check(CLI::IsMember({"ksat", "bincsp"}));
  gen->add_option("--vars", gen_vars, "Number of variables")->required();
  gen->add_option("--clauses", gen_clauses, "Clauses (ksat)");
  gen->add_option("--width", gen_width, "Literals per clause (ksat)");
  gen->add_option("--constraints", gen_constraints, "Binary constraints (bincsp)");
  gen->add_option("--domain", gen_domain, "Domain size (bincsp)");
  gen->add_option("--tightness", gen_tightness, "Fraction of forbidden pairs (bincsp)");
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("-o,--output", gen_out, "Output file")->required();

  // verify ------------------------------------------------------------------
  CLI::App* verify = app.add_subcommand("verify", "Measure the documented claims on a suite");
  VerifyOptions vo;
  std::string verify_report, verify_structured;
  verify->add_option("--claims", vo.claims, "all or a comma-separated list (T1..T10, S1)");
  verify->add_option("--suite", vo.suite, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  verify->add_option("--max-vars", vo.max_vars, "Exhaustive: formula variables");
  verify->add_option("--max-clauses", vo.max_clauses, "Exhaustive: formula clauses");
  verify->add_option("--max-width", vo.max_width, "Exhaustive: clause width");
  verify->add_option("--csp-max-vars", vo.csp_max_vars, "Exhaustive: constraint-problem variables");
  verify->add_option("--csp-max-domain", vo.csp_max_domain, "Exhaustive: domain size");
  verify->add_option("--random-count", vo.random_count, "Random: instances per side");
  verify->add_option("--sat-vars", vo.sat_vars, "Random: formula variables");
  verify->add_option("--sat-clauses", vo.sat_clauses, "Random: formula clauses");
  verify->add_option("--sat-width", vo.sat_width, "Random: clause width");
  verify->add_option("--bincsp-vars", vo.bincsp_vars, "Random: constraint-problem variables");
  verify->add_option("--bincsp-domain", vo.bincsp_domain, "Random: domain size");
  verify->add_option("--bincsp-constraints", vo.bincsp_constraints, "Random: constraints");
  verify->add_option("--bincsp-tightness", vo.bincsp_tightness, "Random: forbidden fraction");
  verify->add_option("--seed", vo.seed, "Random: base seed");
  verify->add_option("--amo", vo.amo, "Direct-encoding at-most-one policy")
      ->check(CLI::IsMember({"both", "none", "pairwise"}));
  verify->add_option("--report", verify_report, "Write the CSV report here");
  verify->add_option("--structured", verify_structured, "Write the JSON report here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;  // fold CLI11's many usage codes into one
  }

  try {
    if (app.got_subcommand(encode)) {
      bool sat_to_csp_dir = enc_from == "sat" && enc_to == "csp";
      bool csp_to_sat_dir = enc_from == "csp" && enc_to == "sat";
      if (!sat_to_csp_dir && !csp_to_sat_dir)
        throw std::invalid_argument("--from/--to must be sat->csp or csp->sat");
      if (sat_to_csp_dir) {
        static const std::vector<std::string> names = {"dual", "hidden", "literal", "nonbinary"};
        if (std::find(names.begin(), names.end(), enc_name) == names.end())
          throw std::invalid_argument("sat->csp encoding must be dual, hidden, literal, or nonbinary");
        SatToCspResult res = sat_to_csp(detail::load_cnf(enc_in), enc_name);
        write_text_file(enc_out, csp_to_text(res.csp));
        write_text_file(enc_out + ".map", encoding_map_to_text(res.map));
        out << "encoding: " << enc_name << "\n"
            << "variables: " << res.csp.num_vars() << "\n"
            << "constraints: " << res.csp.num_constraints() << "\n";
      } else {
        static const std::vector<std::string> names = {"direct", "log", "support"};
        if (std::find(names.begin(), names.end(), enc_name) == names.end())
          throw std::invalid_argument("csp->sat encoding must be direct, log, or support");
        Csp p = detail::load_csp(enc_in);
        CspToSatResult res = enc_name == "direct" ? encode_direct(p, enc_amo)
                                                  : csp_to_sat(p, enc_name);
        write_text_file(enc_out, write_dimacs(res.cnf));
        write_text_file(enc_out + ".map", encoding_map_to_text(res.map));
        out << "encoding: " << enc_name << "\n"
            << "variables: " << res.cnf.num_vars << "\n"
            << "clauses: " << res.cnf.clauses.size() << "\n";
      }
      out << "written: " << enc_out << "\n"
          << "map: " << enc_out << ".map\n";
      return 0;
    }

    if (app.got_subcommand(solve)) {
      if (solve_solver == "dp") {
        Cnf f = detail::load_cnf(solve_in);
        detail::print_sat_stats(out, dp_solve(f, BranchPlan::ascending(f.num_vars)));
      } else {
        Csp p = detail::load_csp(solve_in);
        CspBranchPlan plan = CspBranchPlan::ascending(p);
        detail::print_csp_stats(out, p,
                                solve_solver == "fc" ? fc_solve(p, plan) : mac_solve(p, plan));
      }
      return 0;
    }

    if (app.got_subcommand(propagate)) {
      if (prop_method == "up") {
        Cnf f = detail::load_cnf(prop_in);
        UpResult res = unit_propagate(f, Assignment(f.num_vars));
        out << "conflict: " << (res.conflict ? "true" : "false") << "\n"
            << "forced_count: " << res.forced_count << "\n"
            << "forced:";
        for (Literal l : res.forced) out << " " << l.code;
        out << "\n";
      } else {
        Csp p = detail::load_csp(prop_in);
        PropagationResult res =
            prop_method == "ac3" ? ac3(p, DomainState(p)) : gac(p, DomainState(p));
        out << "wipeout: " << (res.wipeout ? "true" : "false") << "\n"
            << "revisions: " << res.revisions << "\n"
            << "pruned:";
        for (const auto& pv : res.pruned)
          out << " (" << pv.first << ","
              << p.variables[static_cast<size_t>(pv.first)]
                     .domain[static_cast<size_t>(pv.second)]
              << ")";
        out << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(gen)) {
      if (gen_kind == "ksat") {
        if (gen_clauses <= 0) throw std::invalid_argument("--clauses must be positive for ksat");
        write_text_file(gen_out,
                        write_dimacs(gen_ksat(gen_vars, gen_clauses, gen_width, gen_seed)));
      } else {
        if (gen_constraints < 0)
          throw std::invalid_argument("--constraints must be nonnegative for bincsp");
        write_text_file(gen_out, csp_to_text(gen_bincsp(gen_vars, gen_constraints, gen_domain,
                                                        gen_tightness, gen_seed)));
      }
      out << "written: " << gen_out << "\n";
      return 0;
    }

    // verify
    VerifyResult result = run_verification(vo);
    out << report_text(result);
    if (!verify_report.empty()) {
      write_text_file(verify_report, report_csv(result));
      out << "report: " << verify_report << "\n";
    }
    if (!verify_structured.empty()) {
      write_text_file(verify_structured, report_structured(result).dump(2) + "\n");
      out << "structured: " << verify_structured << "\n";
    }
    return result.all_pass ? 0 : 1;
  } catch (const DimacsParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace satcsp
