#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bspec/spectra.hpp"
#include "bspec/subspace.hpp"

namespace bspec {

// Adapted vectors

enum class Adaptedness { adapted, weakly_adapted, neither };
std::string to_string(Adaptedness a);

struct AdaptedPoint {
  std::uint64_t index = 0;
  Vec point;
  /// dim(S cap (x^perp (x) x)).
  std::size_t intersection_dim = 0;
  Adaptedness kind = Adaptedness::neither;
};

struct AdaptedScanReport {
  std::size_t n = 0;
  std::vector<AdaptedPoint> points;
  std::size_t adapted = 0;
  std::size_t weakly_adapted = 0;
  std::size_t neither = 0;
  std::vector<Vec> non_adapted() const;
};

/// dim(S cap (x^perp (x) x)) for one vector.
std::size_t adapted_intersection_dim(const MatSubspace& s, std::span<const Fq> x);
/// Classifies every projective point of F^n.
AdaptedScanReport adapted_scan(const MatSubspace& s, unsigned workers = 1);

// Hurdles

struct HurdleCertificate {
  /// Two-dimensional subspace of the dual (row vectors).
  VecSubspace p;
  /// Its annihilator in V, of codimension 2.
  VecSubspace g;
};

/// Span of every phi (x) y with phi in p and phi(y) = 0: the (2n-1)-dimensional
/// space {phi1 (x) y1 + phi2 (x) y2 : phi1(y1) + phi2(y2) = 0}.
MatSubspace hurdle_tensors(const VecSubspace& p);
bool is_hurdle_certificate(const MatSubspace& s, const VecSubspace& p);

enum class SearchStatus { found, none, budget };
std::string to_string(SearchStatus s);

struct HurdleSearch {
  SearchStatus status = SearchStatus::none;
  std::optional<HurdleCertificate> certificate;
  std::uint64_t index = 0;
  std::uint64_t candidates = 0;
};

/// First 2-dimensional dual subspace P, in Grassmannian order, whose tensors
/// all lie in s.
HurdleSearch detect_hurdle(const MatSubspace& s, std::uint64_t budget = kDefaultBudget, unsigned workers = 1);

// Transitivity (T inside Hom(U, V) = rows x cols matrices, V = F^rows)

/// dim span{t x : t in T}.
std::size_t image_dim(const MatSubspace& t, std::span<const Fq> x);
std::size_t transitive_rank(const MatSubspace& t);
bool is_intransitive(const MatSubspace& t);
/// pi T for pi : V -> V/W in the quotient chart of W.
MatSubspace project_space(const MatSubspace& t, const QuotientChart& chart);
/// A proper nonzero W of greatest dimension with pi T intransitive, or none.
std::optional<VecSubspace> find_intransitivity_veil(const MatSubspace& t);
bool is_primitively_intransitive(const MatSubspace& t);

// Alternators

struct AlternatorSearch {
  SearchStatus status = SearchStatus::none;
  Mode mode = Mode::exhaustive;
  /// Gram matrix G (dim U x dim V) of b(x, y) = x^T G y.
  std::optional<Matrix> gram;
  /// Dimension of the space of (possibly degenerate) solutions.
  std::size_t solution_dim = 0;
};

/// Every G with x^T G f x = 0 for all x and all f in t, i.e. G f alternating.
MatSubspace alternator_solutions(const MatSubspace& t);
bool is_alternator(const MatSubspace& t, const Matrix& gram);
/// Searches the solution space for a right-nondegenerate G (rank dim V).
AlternatorSearch find_alternator(const MatSubspace& t, const ScanOptions& opts = {});

// Choice Lemma

struct ChoiceResult {
  SearchStatus status = SearchStatus::none;
  /// p x (n-p) block placed in the top-right corner.
  std::optional<Matrix> r;
  /// "affine" or "exhaustive".
  std::string path;
};

/// Precomputes what does not depend on the target polynomial.
class ChoiceSolver {
 public:
  /// Throws std::invalid_argument unless m is regular Hessenberg and 1 <= p <= n-1.
  ChoiceSolver(const Matrix& m, std::size_t p, std::uint64_t budget = kDefaultBudget);
  /// Throws std::invalid_argument unless target is monic of degree n with tr = tr M.
  ChoiceResult solve(const Poly& target) const;
  /// M with r added in the top-right block.
  Matrix perturbed(const Matrix& r) const;

 private:
  Matrix m_;
  std::size_t p_;
  std::uint64_t budget_;
  bool affine_ = false;
  Poly base_;
  // For the affine path: char poly increments of each unit perturbation.
  std::vector<Poly> increments_;
};

ChoiceResult choice_solve(const Matrix& m, const Poly& r, std::size_t p, std::uint64_t budget = kDefaultBudget);

}  // namespace bspec
