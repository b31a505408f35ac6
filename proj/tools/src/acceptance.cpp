#include <chrono>

#include "bspec/cli/app.hpp"
#include "bspec/constructions.hpp"
#include "bspec/json_io.hpp"
#include "bspec/lemmas.hpp"
#include "bspec/parallel.hpp"
#include "bspec/random.hpp"
#include "bspec/structure.hpp"

namespace bspec::cli {

namespace {

using Clock = std::chrono::steady_clock;

// Scan sizes pinned by the criteria.
constexpr std::uint64_t kExhaustiveBudget = std::uint64_t{1} << 24;
constexpr std::uint64_t kSampledBudget = std::uint64_t{1} << 20;
constexpr std::uint64_t kLargeSamples = 1'000'000;
constexpr std::uint64_t kEvenSamples = 100'000;
constexpr std::uint64_t kHarnessTrials = 200;
constexpr std::size_t kConjugates = 20;
constexpr std::size_t kAlternatorTrials = 20;

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) { return checked_pow(b, e).value_or(0); }

// Accumulates named checks; the criterion passes when all of them do.
class Checks {
 public:
  void add(std::string name, bool ok, json info = json::object()) {
    info["check"] = std::move(name);
    info["ok"] = ok;
    all_ &= ok;
    items_.push_back(std::move(info));
  }
  bool ok() const { return all_; }
  json to_json() const { return items_; }

 private:
  bool all_ = true;
  json items_ = json::array();
};

json verdict_json(const SpaceVerdict& v) {
  json j = v;
  j.erase("seed");
  return j;
}

CriterionResult criterion_dimensions() {
  const Field f = Field::make(2);
  Checks c;
  auto expect = [&](const std::string& name, const MatSubspace& s, std::uint64_t want) {
    c.add(name, s.dim() == want, {{"dim", s.dim()}, {"expected", want}});
  };
  for (std::size_t n = 1; n <= 6; ++n) expect("NT_" + std::to_string(n), nt(f, n), binom(n, 2));
  for (std::size_t n = 2; n <= 6; ++n)
    expect("sl2 v NT_" + std::to_string(n - 2), joint(sl(f, 2), nt(f, n - 2)), binom(n, 2) + 2);
  expect("sl2 v sl2", joint(sl(f, 2), sl(f, 2)), binom(4, 2) + 4);
  expect("B_4", b2m(f, 2), 10);
  for (std::size_t n : {3, 5, 6})
    for (std::size_t k = 0; k + 2 <= n; ++k)
      expect("F I + (NT_" + std::to_string(k) + " v sl2 v NT_" + std::to_string(n - k - 2) + ")",
             line_plus(joint({nt(f, k), sl(f, 2), nt(f, n - k - 2)})), binom(n, 2) + 3);
  expect("case_iv_n6", case_iv_n6(f), 18);
  return {1, "construction dimensions", c.ok(), c.to_json(), 0};
}

CriterionResult criterion_exhaustive(std::uint64_t seed, unsigned workers) {
  const Field f = Field::make(2);
  Checks c;
  const ScanOptions opts{kExhaustiveBudget, kLargeSamples, seed, workers};
  auto expect = [&](const std::string& name, const MatSubspace& s, const std::string& pred) {
    const SpaceVerdict v = check_space(s, SpecPredicate::parse(pred), opts, name);
    const std::uint64_t total = ipow(f.order(), s.dim());
    c.add(name + " " + pred,
          v.outcome == Outcome::holds && v.mode == Mode::exhaustive && v.examined == total,
          {{"verdict", verdict_json(v)}, {"elements", total}});
  };
  expect("sl2", sl(f, 2), "1-spec");
  expect("sl2", sl(f, 2), "1bar-spec");
  for (std::size_t n = 1; n <= 4; ++n) expect("NT_" + std::to_string(n), nt(f, n), "0bar*-spec");
  expect("sl2 v NT_2", joint(sl(f, 2), nt(f, 2)), "1bar*-spec");
  expect("sl2 v sl2", joint(sl(f, 2), sl(f, 2)), "2bar-spec");
  expect("B_4", b2m(f, 2), "2bar-spec");
  return {2, "exhaustive spectrum checks over GF(4)", c.ok(), c.to_json(), 0};
}

CriterionResult criterion_sampled(std::uint64_t seed, unsigned workers) {
  const Field f = Field::make(2);
  Checks c;
  const ScanOptions opts{kSampledBudget, kLargeSamples, seed, workers};
  auto expect = [&](const std::string& name, const MatSubspace& s, const std::string& pred) {
    const SpaceVerdict v = check_space(s, SpecPredicate::parse(pred), opts, name);
    c.add(name + " " + pred,
          v.outcome == Outcome::holds && v.mode == Mode::sampled && v.examined >= kLargeSamples,
          {{"verdict", verdict_json(v)}, {"dim", s.dim()}});
  };
  expect("sl2 v NT_3", joint(sl(f, 2), nt(f, 3)), "1bar*-spec");
  expect("F I + (NT_1 v sl2 v NT_2)", line_plus(joint({nt(f, 1), sl(f, 2), nt(f, 2)})), "2bar-spec");
  expect("case_iv_n6", case_iv_n6(f), "2bar-spec");
  return {3, "sampled spectrum checks", c.ok(), c.to_json(), 0};
}

CriterionResult criterion_even(std::uint64_t seed, unsigned workers) {
  Checks c;
  auto expect = [&](const std::string& name, const MatSubspace& s, const ScanOptions& opts, Mode want) {
    const ScanResult r = scan_elements(s.flat(), opts, [&](std::span<const Fq> x) {
      return is_even_poly(char_poly(s.reshape(x)));
    });
    c.add(name, !r.over_budget && !r.first_failure && r.mode == want,
          {{"mode", to_string(r.mode)},
           {"examined", r.planned},
           {"first_odd", r.first_failure ? json(*r.first_failure) : json(nullptr)}});
  };
  const ScanOptions full{kExhaustiveBudget, kLargeSamples, seed, workers};
  expect("b2m(1) over gf4", b2m(Field::make(2), 1), full, Mode::exhaustive);
  expect("b2m(1) over gf8", b2m(Field::make(3), 1), full, Mode::exhaustive);
  const ScanOptions sampled{kEvenSamples, kEvenSamples, seed, workers};
  expect("b2m(2) over gf4", b2m(Field::make(2), 2), sampled, Mode::sampled);
  return {4, "even characteristic polynomials on B_2m", c.ok(), c.to_json(), 0};
}

bool min_poly_has_two_root_form(const Matrix& m) {
  const Field f = m.field();
  const Poly t = Poly::from_codes(f, {0, 1});
  const Poly t1 = Poly::from_codes(f, {1, 1});
  Poly p = min_poly(m);
  for (const Poly& d : {t, t1})
    while (p.degree() > 0 && (p % d).is_zero()) p = p / d;
  return p == Poly::constant(f, f.one());
}

CriterionResult criterion_f2(std::uint64_t seed, unsigned workers) {
  const Field f = Field::make(1);
  Checks c;
  const SpecPredicate pred = SpecPredicate::parse("1bar*-spec");
  for (std::size_t n = 1; n <= 4; ++n) {
    const MatSubspace s = ut(f, n);
    const SpaceVerdict v = check_space(s, pred, {kExhaustiveBudget, kLargeSamples, seed, workers}, "UT");
    c.add("UT_" + std::to_string(n),
          s.dim() == binom(n + 1, 2) && v.outcome == Outcome::holds && v.mode == Mode::exhaustive &&
              v.examined == ipow(2, s.dim()),
          {{"dim", s.dim()}, {"expected_dim", binom(n + 1, 2)}, {"verdict", verdict_json(v)}});
  }
  const MatSubspace all = full_space(f, 3);
  std::uint64_t agree = 0;
  std::uint64_t form = 0;
  for_each_element(all.flat(), kExhaustiveBudget, [&](std::span<const Fq> x) {
    const Matrix m = all.reshape(x);
    const bool a = min_poly_has_two_root_form(m);
    form += a;
    agree += a == pred.holds_for(char_poly(m));
    return true;
  });
  c.add("min-poly form on Mat_3(F_2)", agree == 512, {{"matrices", 512}, {"agree", agree}, {"of_form", form}});
  return {5, "F_2 checks", c.ok(), c.to_json(), 0};
}

json harness_summary(const HarnessReport& h) {
  json j{{"instances", h.instances}, {"held", h.held},     {"failed", h.failed},
         {"hypothesis_violations", h.violations},          {"budget", h.over_budget},
         {"sampled", h.sampled},     {"passed", h.passed()}};
  if (!h.notable.empty()) j["first_notable"] = json(h.notable.front());
  return j;
}

HarnessOptions harness_options(std::uint64_t seed, unsigned workers) {
  HarnessOptions o;
  o.field = Field::make(2);
  o.trials = kHarnessTrials;
  o.seed = seed;
  o.workers = workers;
  return o;
}

CriterionResult criterion_harnesses(std::uint64_t seed, unsigned workers) {
  Checks c;
  const HarnessOptions o = harness_options(seed, workers);
  for (const char* name : {"trace-ortho-1", "trace-ortho-2", "transrank", "covering", "vanishing", "confinement-first",
                           "confinement-second", "splitting", "hurdle-dim", "diagonal-zero"}) {
    const HarnessReport h = run_harness(name, o);
    json info = harness_summary(h);
    bool ok = h.instances >= kHarnessTrials && h.held == h.instances && h.passed();
    if (std::string_view(name) == "diagonal-zero") {
      json witnesses = json::array();
      for (const auto& s : h.extra.at("zero_diagonal_scans")) {
        ok &= s.at("outcome") == "fails" && s.contains("witness");
        witnesses.push_back(json{{"n", s.at("n")}, {"outcome", s.at("outcome")}, {"mode", s.at("mode")}});
      }
      ok &= witnesses.size() == 3;
      info["zero_diagonal_scans"] = std::move(witnesses);
    }
    c.add(name, ok, std::move(info));
  }
  const HarnessReport span = run_harness("sl-rank1-span", o);
  c.add("sl-rank1-span", span.passed() && span.held == span.instances, harness_summary(span));
  return {6, "lemma harnesses", c.ok(), c.to_json(), 0};
}

CriterionResult criterion_choice(unsigned workers) {
  const Field f = Field::make(2);
  constexpr std::size_t n = 3;
  const std::uint64_t q = f.order();
  const std::uint64_t free_count = ipow(q, 6);
  const std::uint64_t total = free_count * (q - 1) * (q - 1);
  constexpr std::uint64_t kChunk = 256;
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;

  struct Tally {
    std::uint64_t solved = 0;
    std::uint64_t unsolved = 0;
    std::uint64_t bad = 0;
    std::optional<std::uint64_t> first_problem;
  };
  std::vector<Tally> tallies(chunks);

  auto matrix_at = [&](std::uint64_t idx) {
    Matrix m(f, n, n);
    std::uint64_t free = idx % free_count;
    std::uint64_t sub = idx / free_count;
    const std::pair<std::size_t, std::size_t> cells[] = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
    for (auto it = std::rbegin(cells); it != std::rend(cells); ++it) {
      m(it->first, it->second) = f.element(static_cast<std::uint32_t>(free % q));
      free /= q;
    }
    m(2, 1) = f.element(static_cast<std::uint32_t>(1 + sub % (q - 1)));
    m(1, 0) = f.element(static_cast<std::uint32_t>(1 + sub / (q - 1)));
    return m;
  };

  Executor(workers).for_chunks(total, kChunk, [&](std::uint64_t begin, std::uint64_t end) {
    Tally& t = tallies[begin / kChunk];
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const Matrix m = matrix_at(idx);
      bool ok = true;
      for (std::size_t p = 1; p <= 2; ++p) {
        const ChoiceSolver solver(m, p);
        for (std::uint32_t c1 = 0; c1 < q; ++c1)
          for (std::uint32_t c0 = 0; c0 < q; ++c0) {
            const Poly target(f, std::vector<Fq>{f.element(c0), f.element(c1), m.trace(), f.one()});
            const ChoiceResult r = solver.solve(target);
            if (!r.r) {
              ++t.unsolved;
              ok = false;
            } else if (char_poly_berkowitz(solver.perturbed(*r.r)) != target) {
              ++t.bad;
              ok = false;
            } else {
              ++t.solved;
            }
          }
      }
      if (!ok && !t.first_problem) t.first_problem = idx;
    }
  });

  Tally sum;
  for (const Tally& t : tallies) {
    sum.solved += t.solved;
    sum.unsolved += t.unsolved;
    sum.bad += t.bad;
    if (t.first_problem && !sum.first_problem) sum.first_problem = t.first_problem;
  }
  const std::uint64_t expected = total * 2 * q * q;
  json d{{"matrices", total},
         {"mode", "exhaustive"},
         {"cases", expected},
         {"solved_and_reverified", sum.solved},
         {"unsolved", sum.unsolved},
         {"reverify_failures", sum.bad}};
  if (sum.first_problem) d["first_problem"] = matrix_at(*sum.first_problem);
  return {7, "choice lemma audit on regular Hessenberg 3x3 over GF(4)", sum.solved == expected, d, 0};
}

CriterionResult criterion_structure(std::uint64_t seed, unsigned workers) {
  const Field f = Field::make(2);
  Checks c;
  for (std::size_t n = 3; n <= 5; ++n) {
    const MatSubspace tmpl = hurdle_template(f, n);
    std::uint64_t recovered = 0;
    std::uint64_t adapted_total = 0;
    std::optional<std::size_t> first_miss;
    for (std::size_t i = 0; i <= kConjugates; ++i) {
      MatSubspace s = tmpl;
      if (i > 0) {
        Rng rng = trial_rng(seed ^ (0x68757264ull << 8 | n), i);
        s = conjugate_space(tmpl, random_invertible(f, n, rng));
      }
      const HurdleSearch h = detect_hurdle(s, kExhaustiveBudget, workers);
      const bool found = h.status == SearchStatus::found && h.certificate && is_hurdle_certificate(s, h.certificate->p);
      if (found) {
        ++recovered;
        adapted_total += adapted_scan(s, workers).adapted;
      } else if (!first_miss) {
        first_miss = i;
      }
    }
    c.add("hurdle_template(" + std::to_string(n) + ") and conjugates",
          recovered == kConjugates + 1 && adapted_total == 0,
          {{"spaces", kConjugates + 1},
           {"recovered", recovered},
           {"adapted_points", adapted_total},
           {"first_miss", first_miss ? json(*first_miss) : json(nullptr)}});
  }
  auto status_of = [&](const MatSubspace& s) { return detect_hurdle(s, kExhaustiveBudget, workers); };
  const HurdleSearch h_nt = status_of(nt(f, 3));
  c.add("NT_3 is not a hurdle", h_nt.status == SearchStatus::none, {{"search", h_nt}});
  const HurdleSearch h_b4 = status_of(b2m(f, 2));
  c.add("B_4 is not a hurdle", h_b4.status == SearchStatus::none, {{"search", h_b4}});
  // sl_3 contains every trace-zero matrix, so it contains {0_1} v sl_2 in the standard basis.
  const HurdleSearch h_sl = status_of(sl(f, 3));
  const bool sl_cert = h_sl.certificate && is_hurdle_certificate(sl(f, 3), h_sl.certificate->p);
  c.add("sl_3 is a hurdle", h_sl.status == SearchStatus::found && sl_cert, {{"search", h_sl}});
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t t_nt = transitive_rank(nt(f, n));
    const std::size_t t_full = transitive_rank(full_space(f, n));
    c.add("trk n=" + std::to_string(n), t_nt == n - 1 && t_full == n, {{"trk_nt", t_nt}, {"trk_mat", t_full}});
  }
  return {8, "structure procedures", c.ok(), c.to_json(), 0};
}

CriterionResult criterion_alternator(std::uint64_t seed, unsigned workers) {
  const Field f = Field::make(2);
  constexpr std::size_t n = 4;
  Checks c;
  std::uint64_t found = 0;
  std::uint64_t nondegenerate = 0;
  std::uint64_t verified = 0;
  std::optional<std::size_t> first_miss;
  for (std::size_t i = 0; i < kAlternatorTrials; ++i) {
    Rng rng = trial_rng(seed ^ 0x616c74ull, i);
    const Matrix p = random_alternating_invertible(f, n, rng);
    const MatSubspace t = trace_orthogonal(mats_p(p));
    const AlternatorSearch a = find_alternator(t, {kExhaustiveBudget, kLargeSamples, seed, workers});
    const bool ok_found = a.status == SearchStatus::found && a.gram;
    const bool ok_rank = ok_found && rank(*a.gram) == t.rows();
    const bool ok_alt = ok_found && is_alternator(t, *a.gram);
    found += ok_found;
    nondegenerate += ok_rank;
    verified += ok_alt;
    if (!(ok_found && ok_rank && ok_alt) && !first_miss) first_miss = i;
  }
  c.add("alternator of (Mats P)^perp",
        found == kAlternatorTrials && nondegenerate == kAlternatorTrials && verified == kAlternatorTrials,
        {{"trials", kAlternatorTrials},
         {"found", found},
         {"right_nondegenerate", nondegenerate},
         {"verified", verified},
         {"first_miss", first_miss ? json(*first_miss) : json(nullptr)}});
  const MatSubspace b4 = b2m(f, 2);
  const MatSubspace k_syms = left_multiply(inverse(symplectic_gram(f, 2)), syms(f, n));
  c.add("B_4 = K_4^-1 Mats_4", b4 == k_syms, {{"dim_b4", b4.dim()}, {"dim_k_syms", k_syms.dim()}});
  return {9, "Mats P and alternator round trip", c.ok(), c.to_json(), 0};
}

CriterionResult criterion_third(std::uint64_t seed, unsigned workers) {
  Checks c;
  HarnessOptions o = harness_options(seed, workers);
  const HarnessReport third = run_harness("confinement-third", o);
  c.add("confinement-third n=5",
        third.passed() && third.held == third.instances && third.sampled == 0, harness_summary(third));
  const HarnessReport last = run_harness("lastblock", o);
  c.add("lastblock exhaustive 3x3", last.passed() && last.sampled == 0, harness_summary(last));
  return {10, "third confinement and lastblock", c.ok(), c.to_json(), 0};
}

template <typename F>
CriterionResult timed(F&& run) {
  const auto t0 = Clock::now();
  CriterionResult r = run();
  r.timing_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return r;
}

json criteria_json(const std::vector<CriterionResult>& cs) {
  json out = json::array();
  for (const auto& c : cs)
    out.push_back(json{{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"details", c.details},
                       {"timing_ms", c.timing_ms}});
  return out;
}

}  // namespace

std::vector<CriterionResult> run_criteria(std::uint64_t seed, unsigned workers) {
  std::vector<CriterionResult> out;
  out.push_back(timed([] { return criterion_dimensions(); }));
  out.push_back(timed([&] { return criterion_exhaustive(seed, workers); }));
  out.push_back(timed([&] { return criterion_sampled(seed, workers); }));
  out.push_back(timed([&] { return criterion_even(seed, workers); }));
  out.push_back(timed([&] { return criterion_f2(seed, workers); }));
  out.push_back(timed([&] { return criterion_harnesses(seed, workers); }));
  out.push_back(timed([&] { return criterion_choice(workers); }));
  out.push_back(timed([&] { return criterion_structure(seed, workers); }));
  out.push_back(timed([&] { return criterion_alternator(seed, workers); }));
  out.push_back(timed([&] { return criterion_third(seed, workers); }));
  return out;
}

AcceptanceReport run_acceptance(const AcceptanceOptions& opts) {
  AcceptanceReport rep;
  rep.criteria = run_criteria(opts.seed, opts.workers);
  if (opts.determinism_workers.empty()) return rep;

  const auto t0 = Clock::now();
  const std::string reference = strip_timing(criteria_json(rep.criteria)).dump();
  json runs = json::array();
  bool same = true;
  for (unsigned w : opts.determinism_workers) {
    const std::string text =
        w == opts.workers ? reference : strip_timing(criteria_json(run_criteria(opts.seed, w))).dump();
    const bool eq = text == reference;
    same &= eq;
    runs.push_back(json{{"workers", w}, {"bytes", text.size()}, {"identical", eq}});
  }
  CriterionResult det{11, "determinism across worker counts", same,
                      json{{"reference_workers", opts.workers}, {"runs", std::move(runs)}}, 0};
  det.timing_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  rep.criteria.push_back(std::move(det));
  return rep;
}

bool AcceptanceReport::passed() const {
  for (const auto& c : criteria)
    if (!c.passed) return false;
  return !criteria.empty();
}

json AcceptanceReport::to_json() const {
  return json{{"passed", passed()}, {"criteria", criteria_json(criteria)}};
}

}  // namespace bspec::cli
