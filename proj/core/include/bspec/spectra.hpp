#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "bspec/enumerate.hpp"
#include "bspec/matrix.hpp"
#include "bspec/subspace.hpp"

namespace bspec {

/// Distinct eigenvalue counts of one matrix, read off its characteristic
/// polynomial (same root set as the minimal polynomial).
struct SpectrumProfile {
  Poly char_poly;
  std::size_t distinct_in_field = 0;
  std::size_t distinct_nonzero_in_field = 0;
  std::size_t distinct_in_closure = 0;
  std::size_t distinct_nonzero_in_closure = 0;
};

SpectrumProfile profile(const Matrix& m);

enum class SpectrumScope { in_field, in_closure };

/// One of the four bounded-spectrum properties: k-spec, kbar-spec, k*-spec, kbar*-spec.
struct SpecPredicate {
  SpectrumScope scope = SpectrumScope::in_field;
  bool exclude_zero = false;
  std::size_t k = 1;

  /// "2-spec", "1bar*-spec", ...
  std::string name() const;
  /// Accepts the forms produced by name(), with "star" allowed for "*".
  static SpecPredicate parse(std::string_view text);
  bool holds(const SpectrumProfile& p) const;
  /// Computes only the count the predicate needs.
  bool holds_for(const Poly& char_poly) const;

  friend bool operator==(const SpecPredicate&, const SpecPredicate&) = default;
};

bool check_element(const Matrix& m, const SpecPredicate& pred);
/// True iff every odd-degree coefficient vanishes.
bool is_even_poly(const Poly& f);

enum class Mode { exhaustive, sampled };
enum class Outcome { holds, fails, budget };
std::string to_string(Mode m);
std::string to_string(Outcome o);

struct ScanOptions {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

struct ScanResult {
  Mode mode = Mode::exhaustive;
  /// Elements scheduled: q^dim when exhaustive, the sample count otherwise.
  std::uint64_t planned = 0;
  std::optional<std::uint64_t> first_failure;
  /// Too large to enumerate and sampling disabled.
  bool over_budget = false;
};

/// Exhaustive when q^dim <= budget, otherwise seeded sampling. Reports the
/// least index at which ok() is false; independent of the worker count.
ScanResult scan_elements(const VecSubspace& s, const ScanOptions& opts,
                         const std::function<bool(std::span<const Fq>)>& ok);
/// The element a scan visits at a given index.
Vec scan_element_at(const VecSubspace& s, Mode mode, std::uint64_t seed, std::uint64_t index);

struct Witness {
  std::uint64_t index = 0;
  Matrix matrix;
  SpectrumProfile profile;
};

struct SpaceVerdict {
  SpecPredicate predicate;
  std::string space_id;
  Mode mode = Mode::exhaustive;
  /// Elements examined: all planned ones on success, up to the witness on failure.
  std::uint64_t examined = 0;
  std::uint64_t seed = 0;
  Outcome outcome = Outcome::holds;
  std::optional<Witness> witness;
};

SpaceVerdict check_space(const MatSubspace& s, const SpecPredicate& pred, const ScanOptions& opts = {},
                         std::string space_id = {});

}  // namespace bspec
