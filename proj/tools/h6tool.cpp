// h6tool: command-line driver for the H6 automorphism computations.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "h6/codes.hpp"
#include "h6/hadamard_aut.hpp"
#include "h6/outer_s6.hpp"
#include "h6/perm.hpp"
#include "h6/report.hpp"
#include "h6/splitquat_rep.hpp"

namespace {

constexpr int kUsage = 2;

std::vector<h6::Report> run_suites(const std::string& only, std::uint64_t seed) {
  std::vector<h6::Report> out;
  auto want = [&](const char* name) { return only.empty() || only == name; };
  if (want("prop1")) out.push_back(h6::verify_prop1());
  if (want("submodule")) out.push_back(h6::verify_submodule());
  if (want("prop2")) out.push_back(h6::verify_prop2());
  if (want("theorem")) out.push_back(h6::verify_theorem(seed));
  if (want("outer")) out.push_back(h6::verify_outer());
  if (want("codes")) out.push_back(h6::verify_codes());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with the 6x6 Eisenstein Hadamard matrix H6"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  bool json = false, text = false;
  std::string only;
  std::uint64_t seed = 20120301;
  auto* json_flag = verify->add_flag("--json", json, "JSON report");
  verify->add_flag("--text", text, "human-readable report (default)")->excludes(json_flag);
  verify->add_option("--only", only, "run one suite")
      ->check(CLI::IsMember({"prop1", "prop2", "theorem", "codes", "outer", "submodule"}));
  verify->add_option("--seed", seed, "seed for randomized checks");

  auto* outer = app.add_subcommand("outer", "the outer automorphism of S6");
  outer->require_subcommand(1);
  auto* apply = outer->add_subcommand("apply", "print sigma(g)");
  std::string cycles;
  apply->add_option("cycles", cycles, "permutation of {1..6} in cycle notation, or id")->required();
  auto* table = outer->add_subcommand("table", "print the full table as JSON");

  auto* order = app.add_subcommand("order", "print the order of a group");
  std::string group;
  order->add_option("--group", group, "X, X0, N, Y, autstar or aut")
      ->required()
      ->check(CLI::IsMember({"X", "X0", "N", "Y", "autstar", "aut"}));

  auto* hexacode = app.add_subcommand("hexacode", "parameters of the hexacode as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (verify->parsed()) {
    std::vector<h6::Report> reports = run_suites(only, seed);
    bool pass = true;
    for (const h6::Report& r : reports) pass = pass && r.pass();
    if (json) {
      std::cout << h6::reports_to_json(reports).dump(2) << '\n';
    } else {
      for (const h6::Report& r : reports) r.print_text(std::cout);
      std::cout << (pass ? "ALL PASS" : "FAILURES") << '\n';
    }
    return pass ? 0 : 1;
  }

  if (apply->parsed()) {
    h6::Permutation g;
    try {
      g = h6::parse_cycles(cycles, 6);
    } catch (const h6::ParseError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kUsage;
    }
    std::cout << h6::build_outer()(g).str() << '\n';
    return 0;
  }
  if (table->parsed()) {
    std::cout << h6::outer_to_json(h6::build_outer()).dump(2) << '\n';
    return 0;
  }

  if (order->parsed()) {
    std::cout << h6::named_group_order(group) << '\n';
    return 0;
  }

  if (hexacode->parsed()) {
    std::cout << h6::hexacode_json().dump(2) << '\n';
    return 0;
  }
  return kUsage;
}
