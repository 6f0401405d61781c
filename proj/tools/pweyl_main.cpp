// pweyl: exact construction and certification of invariant Darboux generators
// for the Poisson field K_n under reflection-group and wreath-product actions.
//
// Subcommands:
//   bracket    -n <rank> <expr1> <expr2>    canonical Poisson bracket
//   construct  <group-spec>                  build + certify generators
//   verify     <certificate.json>            re-check a certificate (exit 1 on failure)
//   invariants <group-spec>                  fundamental invariants + Jacobian data

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "pweyl/certificate.hpp"
#include "pweyl/expr.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{"exact Darboux generators for invariant Poisson fields"};
  app.require_subcommand(1);

  std::uint64_t seed = 0x5eed;
  unsigned max_order = pweyl::GroupAction::kDefaultBound;
  bool serial = false;
  app.add_option("--seed", seed, "seed for the independence witness sampling");
  app.add_option("--max-group-order", max_order, "bound on materialized group closures");
  app.add_flag("--serial", serial, "disable parallel verification (reference path)");

  // bracket
  auto* cmd_bracket = app.add_subcommand("bracket", "Poisson bracket of two expressions");
  unsigned rank = 1;
  std::string expr1, expr2;
  cmd_bracket->add_option("-n,--rank", rank, "ambient rank n")->required();
  cmd_bracket->add_option("expr1", expr1)->required();
  cmd_bracket->add_option("expr2", expr2)->required();

  // construct
  auto* cmd_construct = app.add_subcommand("construct", "construct certified generators");
  std::string spec;
  std::string emit = "json";
  bool reduce = false;
  std::string out_path;
  cmd_construct->add_option("group-spec", spec, "e.g. Sn(n=3), G(m=4,p=2,n=2), wreath(BD(n=2),3)")
      ->required();
  cmd_construct->add_option("--emit", emit, "output form: json|latex|text")
      ->check(CLI::IsMember({"json", "latex", "text"}));
  cmd_construct->add_flag("--reduce", reduce, "fully reduce functions on emission");
  cmd_construct->add_option("-o,--output", out_path, "write to file instead of stdout");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "re-check a certificate file");
  std::string cert_path;
  cmd_verify->add_option("certificate", cert_path)->required();

  // invariants
  auto* cmd_invariants = app.add_subcommand("invariants", "fundamental invariants + Jacobian");
  std::string inv_spec;
  cmd_invariants->add_option("group-spec", inv_spec)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return 0;
    }
    std::cerr << e.what() << "\n";
    return 2;
  }

  pweyl::VerifyOptions opts;
  opts.seed = seed;
  opts.parallel = !serial;

  auto write_out = [&](const std::string& text) {
    if (out_path.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
      std::ofstream f(out_path);
      if (!f) throw pweyl::input_error("cannot open output file " + out_path);
      f << text;
      if (!text.empty() && text.back() != '\n') f << "\n";
    }
  };

  if (*cmd_bracket) {
    pweyl::RatFn f = pweyl::parse_ratfn(expr1, rank);
    pweyl::RatFn g = pweyl::parse_ratfn(expr2, rank);
    std::cout << pweyl::bracket(f, g).to_string() << "\n";
    return 0;
  }

  if (*cmd_construct) {
    pweyl::NoetherSolution sol = pweyl::construct_for_spec(spec, opts, max_order);
    if (emit == "json")
      write_out(pweyl::solution_to_json(sol, reduce).dump(2));
    else if (emit == "latex")
      write_out(pweyl::solution_to_latex(sol));
    else
      write_out(pweyl::solution_to_text(sol));
    return 0;
  }

  if (*cmd_verify) {
    std::ifstream f(cert_path);
    if (!f) {
      std::cerr << "cannot open " << cert_path << "\n";
      return 2;
    }
    nlohmann::json j;
    try {
      f >> j;
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "malformed JSON: " << e.what() << "\n";
      return 2;
    }
    pweyl::ParsedCertificate cert = pweyl::parse_certificate(j, max_order);
    pweyl::ReverifyResult res = pweyl::reverify_certificate(cert, opts);
    if (res.ok) {
      std::cout << "certificate OK: " << res.report.summary() << "\n";
      return 0;
    }
    std::cout << "certificate FAILED:\n";
    for (const auto& m : res.failures) std::cout << "  " << m << "\n";
    return 1;
  }

  if (*cmd_invariants) {
    pweyl::GroupAction action = pweyl::parse_group_spec(inv_spec, max_order);
    pweyl::InvariantSystem sys = pweyl::fundamental_invariants(action);
    pweyl::JacobianData jd = pweyl::jacobian(sys);
    std::cout << pweyl::invariant_data_to_json(sys, jd).dump(2) << "\n";
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const pweyl::verification_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const pweyl::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const pweyl::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
