#include "bspec/spectra.hpp"

#include <charconv>
#include <regex>
#include <stdexcept>

#include "bspec/parallel.hpp"

namespace bspec {

namespace {

constexpr std::uint64_t kScanChunk = 4096;

}  // namespace

SpectrumProfile profile(const Matrix& m) {
  SpectrumProfile p{char_poly(m)};
  const bool zero_root = p.char_poly.coeff(0).is_zero();
  p.distinct_in_field = count_roots_in_field(p.char_poly);
  p.distinct_in_closure = count_roots_in_closure(p.char_poly);
  p.distinct_nonzero_in_field = p.distinct_in_field - (zero_root ? 1 : 0);
  p.distinct_nonzero_in_closure = p.distinct_in_closure - (zero_root ? 1 : 0);
  return p;
}

std::string SpecPredicate::name() const {
  std::string s = std::to_string(k);
  if (scope == SpectrumScope::in_closure) s += "bar";
  if (exclude_zero) s += "*";
  return s + "-spec";
}

SpecPredicate SpecPredicate::parse(std::string_view text) {
  static const std::regex re(R"(^(\d+)(bar)?(\*|star)?-spec$)");
  std::cmatch m;
  if (!std::regex_match(text.begin(), text.end(), m, re))
    throw std::invalid_argument("unknown predicate '" + std::string(text) + "'");
  SpecPredicate p;
  p.k = std::stoul(m[1].str());
  p.scope = m[2].matched ? SpectrumScope::in_closure : SpectrumScope::in_field;
  p.exclude_zero = m[3].matched;
  return p;
}

bool SpecPredicate::holds(const SpectrumProfile& p) const {
  if (scope == SpectrumScope::in_field)
    return (exclude_zero ? p.distinct_nonzero_in_field : p.distinct_in_field) <= k;
  return (exclude_zero ? p.distinct_nonzero_in_closure : p.distinct_in_closure) <= k;
}

bool SpecPredicate::holds_for(const Poly& f) const {
  if (scope == SpectrumScope::in_field)
    return (exclude_zero ? count_nonzero_roots_in_field(f) : count_roots_in_field(f)) <= k;
  return (exclude_zero ? count_nonzero_roots_in_closure(f) : count_roots_in_closure(f)) <= k;
}

bool check_element(const Matrix& m, const SpecPredicate& pred) { return pred.holds_for(char_poly(m)); }

bool is_even_poly(const Poly& f) {
  for (std::size_t i = 1; i < f.coeffs().size(); i += 2)
    if (!f.coeffs()[i].is_zero()) return false;
  return true;
}

std::string to_string(Mode m) { return m == Mode::exhaustive ? "exhaustive" : "sampled"; }

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::holds:
      return "holds";
    case Outcome::fails:
      return "fails";
    case Outcome::budget:
      return "budget";
  }
  return "?";
}

Vec scan_element_at(const VecSubspace& s, Mode mode, std::uint64_t seed, std::uint64_t index) {
  if (mode == Mode::exhaustive) return element_at(s, index);
  return s.combine(sample_coords(s.field(), s.dim(), seed, index));
}

ScanResult scan_elements(const VecSubspace& s, const ScanOptions& opts,
                         const std::function<bool(std::span<const Fq>)>& ok) {
  ScanResult r;
  const auto count = element_count(s);
  const Executor exec(opts.workers);
  if (count && *count <= opts.budget) {
    r.mode = Mode::exhaustive;
    r.planned = *count;
    r.first_failure = exec.find_first(*count, kScanChunk, [&](std::uint64_t begin, std::uint64_t end)
                                                              -> std::optional<std::uint64_t> {
      ElementStream it(s, begin);
      for (std::uint64_t i = begin; i < end; ++i, it.advance())
        if (!ok(it.value())) return i;
      return std::nullopt;
    });
    return r;
  }
  r.mode = Mode::sampled;
  if (opts.samples == 0) {
    r.over_budget = true;
    return r;
  }
  r.planned = opts.samples;
  r.first_failure = exec.find_first(opts.samples, kScanChunk, [&](std::uint64_t begin, std::uint64_t end)
                                                                  -> std::optional<std::uint64_t> {
    for (std::uint64_t i = begin; i < end; ++i)
      if (!ok(scan_element_at(s, Mode::sampled, opts.seed, i))) return i;
    return std::nullopt;
  });
  return r;
}

SpaceVerdict check_space(const MatSubspace& s, const SpecPredicate& pred, const ScanOptions& opts,
                         std::string space_id) {
  if (!s.is_square()) throw std::invalid_argument("check_space: space of non-square matrices");
  const Field f = s.field();
  const std::size_t n = s.rows();
  const ScanResult scan = scan_elements(s.flat(), opts, [&](std::span<const Fq> v) {
    return pred.holds_for(char_poly_of(f, n, v));
  });
  SpaceVerdict v{pred, std::move(space_id), scan.mode, scan.planned, opts.seed, Outcome::holds, std::nullopt};
  if (scan.over_budget) {
    v.outcome = Outcome::budget;
    return v;
  }
  if (scan.first_failure) {
    const std::uint64_t i = *scan.first_failure;
    Matrix w = s.reshape(scan_element_at(s.flat(), scan.mode, opts.seed, i));
    SpectrumProfile p = profile(w);
    v.outcome = Outcome::fails;
    v.examined = i + 1;
    v.witness = Witness{i, std::move(w), std::move(p)};
  }
  return v;
}

}  // namespace bspec
