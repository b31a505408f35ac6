#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "bspec/cli/app.hpp"
#include "bspec/lemmas.hpp"

namespace {

using namespace bspec::cli;

void add_field_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--field", c.field, "Field: gf2, gf4, gf8, ... or gf2^k")->capture_default_str();
  sub->add_option("--modulus", c.modulus, "Irreducible modulus as an integer bit pattern");
  sub->add_option("--seed", c.seed, "Seed for sampling and generators")->capture_default_str();
  sub->add_option("--workers", c.workers, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
}

void add_space_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--construction", c.construction, "Construction name or expression, e.g. nt, joint(sl(2),nt(2))");
  sub->add_option("--n", c.n, "Matrix size for bare construction names (default 4)");
  sub->add_option("--m", c.m, "Half size for b2m");
  sub->add_option("--space", c.space_file, "JSON file {rows, cols, basis}");
}

void add_budget_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--budget", c.budget, "Largest element count scanned exhaustively");
  sub->add_option("--samples", c.samples, "Samples drawn when over budget");
}

int emit(const CommandResult& r, const std::string& out) {
  const std::string text = r.report.dump(2);
  if (out.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "error: cannot write '" << out << "'\n";
      return kUsageError;
    }
    f << text << '\n';
  }
  return r.exit_code;
}

void print_criteria(const json& acceptance) {
  for (const auto& c : acceptance.at("criteria"))
    std::cerr << (c.at("passed").get<bool>() ? "PASS" : "FAIL") << "  " << c.at("id").get<int>() << "  "
              << c.at("title").get<std::string>() << "  (" << static_cast<long long>(c.at("timing_ms").get<double>())
              << " ms)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded-spectrum matrix space toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  RunConfig c;
  std::string out;
  std::map<CLI::App*, std::function<CommandResult(const RunConfig&)>> commands;

  auto* verify = app.add_subcommand("verify", "Check a spectrum predicate on every element of a space");
  add_field_options(verify, c);
  add_space_options(verify, c);
  add_budget_options(verify, c);
  verify->add_option("--pred", c.pred, "k-spec, kbar-spec, k*-spec or kbar*-spec")->capture_default_str();
  verify->add_option("--k", c.k, "Override the k of --pred");
  commands[verify] = cmd_verify;

  auto* scan = app.add_subcommand("scan-adapted", "Classify every projective point as adapted or not");
  add_field_options(scan, c);
  add_space_options(scan, c);
  commands[scan] = cmd_scan_adapted;

  auto* hurdle = app.add_subcommand("detect-hurdle", "Search for a hurdle certificate");
  add_field_options(hurdle, c);
  add_space_options(hurdle, c);
  add_budget_options(hurdle, c);
  commands[hurdle] = cmd_detect_hurdle;

  auto* trk = app.add_subcommand("trk", "Transitive rank and intransitivity veil");
  add_field_options(trk, c);
  add_space_options(trk, c);
  commands[trk] = cmd_trk;

  auto* choice = app.add_subcommand("choice", "Place a block so the characteristic polynomial hits a target");
  add_field_options(choice, c);
  add_budget_options(choice, c);
  choice->add_option("--matrix", c.matrix, "Regular Hessenberg matrix, rows ';' separated, codes ','")->required();
  choice->add_option("--target", c.target, "Monic target, e.g. \"t^3 + 2*t + 1\"")->required();
  choice->add_option("--p", c.p, "Rows of the perturbed block")->capture_default_str();
  commands[choice] = cmd_choice;

  auto* lemma = app.add_subcommand("lemma", "Run a seeded lemma harness");
  add_field_options(lemma, c);
  add_budget_options(lemma, c);
  lemma->add_option("--lemma,--name", c.lemma, "Harness name")->required()->check(CLI::IsMember(bspec::harness_names()));
  lemma->add_option("--trials", c.trials, "Instances to generate")->capture_default_str();
  lemma->add_option("--n", c.n, "Restrict sized harnesses to this n");
  commands[lemma] = cmd_lemma;

  auto* acceptance = app.add_subcommand("acceptance", "Run the acceptance suite");
  acceptance->add_option("--seed", c.seed, "Seed")->capture_default_str();
  acceptance->add_option("--workers", c.workers, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  commands[acceptance] = cmd_acceptance;

  for (auto& [sub, fn] : commands) sub->add_option("--out", out, "Write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  for (auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    try {
      const CommandResult r = fn(c);
      if (sub == acceptance) print_criteria(r.report.at("acceptance"));
      return emit(r, out);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kUsageError;
    } catch (const std::domain_error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kUsageError;
    }
  }
  return kUsageError;
}
