#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bspec/spectra.hpp"
#include "bspec/structure.hpp"

namespace bspec {

/// Outcome of checking one lemma instance. Hypotheses are always checked
/// before the conclusion.
enum class Verdict { holds, fails, hypothesis_violation, budget };
std::string to_string(Verdict v);

struct LemmaVerdict {
  Verdict verdict = Verdict::holds;
  /// How the most expensive scan ran (hypothesis or conclusion).
  Mode mode = Mode::exhaustive;
  std::string detail;
  /// Counterexample or violating input, when there is one.
  std::optional<Vec> point;
  std::optional<Matrix> matrix;
};

// Covering

enum class CoverStatus { covers, uncovered, budget };
std::string to_string(CoverStatus s);

struct CoverResult {
  CoverStatus status = CoverStatus::covers;
  std::optional<Vec> point;
};

/// First projective point of F^n outside every member of the family.
CoverResult covering_check(const std::vector<VecSubspace>& family, std::size_t n,
                           std::uint64_t budget = kDefaultBudget);
/// Validates |F| > r, |I| = (n-1) r + 1, exactly r members of each dimension
/// 1..n-2 and r+1 hyperplanes, then asserts the family does not cover F^n.
LemmaVerdict covering_lemma_check(const std::vector<VecSubspace>& family, std::size_t n, std::size_t r,
                                  std::uint64_t budget = kDefaultBudget);

// Vanishing

/// Polynomial in n variables as exponent vector -> coefficient.
struct HomogeneousPoly {
  Field field;
  std::size_t n = 0;
  std::vector<std::pair<std::vector<unsigned>, Fq>> terms;

  Fq eval(std::span<const Fq> x) const;
  /// Total degree of every term with a nonzero coefficient, or nullopt when
  /// the terms disagree. The zero polynomial reports 0.
  std::optional<unsigned> homogeneous_degree() const;
};

/// Every exponent vector of total degree d in n variables, lexicographically
/// descending.
std::vector<std::vector<unsigned>> monomials(std::size_t n, unsigned d);

/// Hypotheses: p is d-homogeneous with |F| >= d, each member is a nonzero
/// proper subspace, at most |F|-1 members per dimension 1..n-2, at most
/// |F|-d hyperplanes, and p vanishes off the union. Conclusion: p = 0 on F^n.
LemmaVerdict vanishing_check(const HomogeneousPoly& p, unsigned d, const std::vector<VecSubspace>& family,
                             std::uint64_t budget = kDefaultBudget);

// Splitting and hurdle dimensions

/// Basis change Q whose first n-2 columns span G = annihilator of P.
Matrix hurdle_adapted_basis(const VecSubspace& p);
/// pred must be 1*-spec or 2-spec.
LemmaVerdict splitting_check(const MatSubspace& s, const VecSubspace& p, const SpecPredicate& pred,
                             const ScanOptions& opts = {});
/// binom(n,2)+2 for 1*-spec, binom(n,2)+3 for 2-spec (n != 4), binom(n,2)+4 at n = 4.
std::size_t hurdle_dimension_bound(std::size_t n, const SpecPredicate& pred);
LemmaVerdict hurdle_dimension_check(const MatSubspace& s, const VecSubspace& p, const SpecPredicate& pred,
                                    const ScanOptions& opts = {});

// Confinement

LemmaVerdict first_confinement_check(const MatSubspace& s, std::span<const Fq> phi, const ScanOptions& opts = {});
/// Every trace-zero u with u(G) = 0 and range inside H = Ker eta.
MatSubspace second_confinement_family(const VecSubspace& g, std::span<const Fq> eta);
/// On success, a found H' is reported in `point` (as a linear form) unless s is a hurdle.
LemmaVerdict second_confinement_check(const MatSubspace& s, const VecSubspace& g, std::span<const Fq> eta,
                                      const ScanOptions& opts = {});
LemmaVerdict third_confinement_check(const MatSubspace& m, const ScanOptions& opts = {});
LemmaVerdict lastblock_check(const Matrix& a);
/// Witness for a space containing every zero-diagonal matrix: the companion
/// matrix of t^(n-3)(t-alpha)(t-beta)(t-alpha-beta).
Matrix diagonal_zero_witness(Field f, std::size_t n, Fq alpha, Fq beta);
LemmaVerdict diagonal_zero_check(const MatSubspace& m, Fq alpha, Fq beta);

// Identities

struct IdentityCheck {
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  bool holds() const { return lhs == rhs; }
};

/// dim(S cap Hom(U, V0)) + dim{v restricted to V0 : v in S^perp} against dim U dim V0.
IdentityCheck trace_ortho_first(const MatSubspace& s, const VecSubspace& v0);
/// dim S_{U0} + dim(pi S^perp) against dim V (dim U - dim U0).
IdentityCheck trace_ortho_second(const MatSubspace& s, const VecSubspace& u0);
/// dim(S^perp x) against n - dim(S cap (V* (x) x)).
IdentityCheck transrank_identity(const MatSubspace& s, std::span<const Fq> x);
/// Span of every trace-zero rank-one tensor of F^n.
MatSubspace rank_one_trace_zero_span(Field f, std::size_t n);

// Harnesses

struct HarnessOptions {
  Field field = Field::make(2);
  std::uint64_t trials = 200;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  /// Inner scans: exhaustive up to this many elements, sampled beyond.
  std::uint64_t budget = std::uint64_t{1} << 14;
  std::uint64_t samples = 2048;
  /// Restricts harnesses that take a size to this n.
  std::optional<std::size_t> n;
};

struct TrialRecord {
  std::uint64_t index = 0;
  Verdict verdict = Verdict::holds;
  Mode mode = Mode::exhaustive;
  std::string detail;
};

struct HarnessReport {
  std::string lemma;
  std::string field;
  std::uint64_t seed = 0;
  std::uint64_t instances = 0;
  std::uint64_t held = 0;
  std::uint64_t failed = 0;
  std::uint64_t violations = 0;
  std::uint64_t over_budget = 0;
  std::uint64_t sampled = 0;
  /// Every non-holding instance, in index order (capped).
  std::vector<TrialRecord> notable;
  nlohmann::json extra = nlohmann::json::object();

  bool passed() const { return failed == 0 && over_budget == 0 && held > 0; }
};

std::vector<std::string> harness_names();
/// Throws std::invalid_argument for unknown names.
HarnessReport run_harness(std::string_view name, const HarnessOptions& opts);

}  // namespace bspec
