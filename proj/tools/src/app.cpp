#include "bspec/cli/app.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bspec/constructions.hpp"
#include "bspec/json_io.hpp"
#include "bspec/lemmas.hpp"
#include "bspec/structure.hpp"

namespace bspec::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Field field_of(const RunConfig& c) { return parse_field(c.field, c.modulus); }

std::size_t size_of(const RunConfig& c) { return c.n.value_or(4); }

ScanOptions scan_options(const RunConfig& c) {
  return ScanOptions{c.budget.value_or(kDefaultBudget), c.samples.value_or(1'000'000), c.seed, c.workers};
}

struct BuiltSpace {
  std::string id;
  MatSubspace space;
};

BuiltSpace build_space(const RunConfig& c) {
  const Field f = field_of(c);
  if (!c.space_file.empty()) {
    std::ifstream in(c.space_file);
    if (!in) throw std::invalid_argument("cannot open space file '" + c.space_file + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw std::invalid_argument("space file is not valid JSON: " + std::string(e.what()));
    }
    return {"file:" + c.space_file, space_from_json(f, j)};
  }
  if (c.construction.empty()) throw std::invalid_argument("no construction given (use --construction or --space)");
  std::string expr = c.construction;
  std::size_t n = size_of(c);
  if (c.m) {
    if (expr == "b2m") expr = "b2m(" + std::to_string(*c.m) + ")";
    n = 2 * *c.m;
  }
  return {expr + " n=" + std::to_string(n), build_construction(f, expr, n)};
}

std::optional<std::size_t> expected_dim(const MatSubspace& s) {
  for (const auto& e : catalogue(s.field()))
    if (e.space == s) return e.expected_dim;
  return std::nullopt;
}

json base_report(const char* command, const RunConfig& c) {
  return json{{"artifact", "bspec"},
              {"version", kVersion},
              {"schema", kSchemaVersion},
              {"command", command},
              {"config", config_json(c)}};
}

json space_summary(const BuiltSpace& b) {
  json j{{"id", b.id}, {"rows", b.space.rows()}, {"cols", b.space.cols()}, {"dim", b.space.dim()}};
  if (b.space.is_square()) {
    const auto e = expected_dim(b.space);
    j["expected_dim"] = e ? json(*e) : json(nullptr);
  }
  return j;
}

void require_square(const MatSubspace& s, const char* what) {
  if (!s.is_square()) throw std::invalid_argument(std::string(what) + " needs a space of square matrices");
}

Matrix parse_matrix(Field f, const std::string& text) {
  std::vector<std::vector<std::uint32_t>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<std::uint32_t> codes;
    std::stringstream cs(row);
    std::string cell;
    while (std::getline(cs, cell, ',')) {
      try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(cell, &used);
        if (cell.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(cell);
        codes.push_back(static_cast<std::uint32_t>(v));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad matrix entry '" + cell + "'");
      }
    }
    rows.push_back(std::move(codes));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  std::vector<std::uint32_t> flat;
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw std::invalid_argument("matrix rows have different lengths");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return Matrix::from_codes(f, rows.size(), rows.front().size(), flat);
}

}  // namespace

json config_json(const RunConfig& c) {
  json j{{"field", c.field},
         {"seed", c.seed},
         {"budget", c.budget ? json(*c.budget) : json(nullptr)},
         {"samples", c.samples ? json(*c.samples) : json(nullptr)}};
  if (c.modulus) j["modulus"] = *c.modulus;
  if (c.n) j["n"] = *c.n;
  if (c.m) j["m"] = *c.m;
  if (!c.construction.empty()) j["construction"] = c.construction;
  if (!c.space_file.empty()) j["space"] = c.space_file;
  return j;
}

CommandResult cmd_verify(const RunConfig& c) {
  const auto t0 = Clock::now();
  const BuiltSpace b = build_space(c);
  require_square(b.space, "verify");
  SpecPredicate pred = SpecPredicate::parse(c.pred);
  if (c.k) pred.k = *c.k;
  const SpaceVerdict v = check_space(b.space, pred, scan_options(c), b.id);
  json r = base_report("verify", c);
  r["config"]["pred"] = pred.name();
  r["space"] = space_summary(b);
  r["verdict"] = v;
  r["timing_ms"] = elapsed_ms(t0);
  return {r, v.outcome == Outcome::holds ? kOk : kCheckFailed};
}

CommandResult cmd_scan_adapted(const RunConfig& c) {
  const auto t0 = Clock::now();
  const BuiltSpace b = build_space(c);
  require_square(b.space, "scan-adapted");
  json r = base_report("scan-adapted", c);
  r["space"] = space_summary(b);
  r["scan"] = adapted_scan(b.space, c.workers);
  r["timing_ms"] = elapsed_ms(t0);
  return {r, kOk};
}

CommandResult cmd_detect_hurdle(const RunConfig& c) {
  const auto t0 = Clock::now();
  const BuiltSpace b = build_space(c);
  require_square(b.space, "detect-hurdle");
  const HurdleSearch h = detect_hurdle(b.space, c.budget.value_or(kDefaultBudget), c.workers);
  json r = base_report("detect-hurdle", c);
  r["space"] = space_summary(b);
  r["hurdle"] = h;
  r["timing_ms"] = elapsed_ms(t0);
  return {r, h.status == SearchStatus::budget ? kCheckFailed : kOk};
}

CommandResult cmd_trk(const RunConfig& c) {
  const auto t0 = Clock::now();
  const BuiltSpace b = build_space(c);
  const std::size_t trk = transitive_rank(b.space);
  json r = base_report("trk", c);
  r["space"] = space_summary(b);
  json res{{"trk", trk}, {"target_dim", b.space.rows()}, {"intransitive", trk < b.space.rows()}};
  if (trk < b.space.rows()) {
    const auto veil = find_intransitivity_veil(b.space);
    res["veil"] = veil ? json(*veil) : json(nullptr);
    res["primitively_intransitive"] = !veil.has_value();
  }
  r["result"] = std::move(res);
  r["timing_ms"] = elapsed_ms(t0);
  return {r, kOk};
}

CommandResult cmd_choice(const RunConfig& c) {
  const auto t0 = Clock::now();
  const Field f = field_of(c);
  if (c.matrix.empty() || c.target.empty()) throw std::invalid_argument("choice needs --matrix and --target");
  const Matrix m = parse_matrix(f, c.matrix);
  const Poly target = parse_poly(f, c.target);
  const ChoiceSolver solver(m, c.p, c.budget.value_or(kDefaultBudget));
  const ChoiceResult res = solver.solve(target);
  json r = base_report("choice", c);
  json out{{"matrix", m}, {"target", target}, {"p", c.p}, {"status", to_string(res.status)}, {"path", res.path}};
  bool verified = false;
  if (res.r) {
    const Matrix sum = solver.perturbed(*res.r);
    const Poly chi = char_poly_berkowitz(sum);
    verified = chi == target;
    out["r"] = *res.r;
    out["perturbed"] = sum;
    out["char_poly"] = chi;
    out["verified"] = verified;
  }
  r["result"] = std::move(out);
  r["timing_ms"] = elapsed_ms(t0);
  return {r, verified ? kOk : kCheckFailed};
}

CommandResult cmd_lemma(const RunConfig& c) {
  const auto t0 = Clock::now();
  HarnessOptions o;
  o.field = field_of(c);
  o.trials = c.trials;
  o.seed = c.seed;
  o.workers = c.workers;
  o.budget = c.budget.value_or(o.budget);
  o.samples = c.samples.value_or(o.samples);
  o.n = c.n;
  const HarnessReport h = run_harness(c.lemma, o);
  json r = base_report("lemma", c);
  r["config"]["lemma"] = c.lemma;
  r["config"]["trials"] = c.trials;
  r["harness"] = h;
  r["timing_ms"] = elapsed_ms(t0);
  return {r, h.passed() ? kOk : kCheckFailed};
}

CommandResult cmd_acceptance(const RunConfig& c) {
  const auto t0 = Clock::now();
  AcceptanceOptions o;
  o.seed = c.seed;
  o.workers = c.workers;
  const AcceptanceReport a = run_acceptance(o);
  json r = base_report("acceptance", c);
  r["acceptance"] = a.to_json();
  r["timing_ms"] = elapsed_ms(t0);
  return {r, a.passed() ? kOk : kCheckFailed};
}

}  // namespace bspec::cli
