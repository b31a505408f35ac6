#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bspec/matrix.hpp"

namespace bspec {

/// Subspace of F^m held by its reduced row-echelon basis. Two subspaces are
/// equal exactly when their bases are identical.
class VecSubspace {
 public:
  /// The zero subspace of F^ambient.
  VecSubspace(Field f, std::size_t ambient);
  static VecSubspace full(Field f, std::size_t ambient);
  static VecSubspace span(Field f, std::size_t ambient, const std::vector<Vec>& vectors);
  /// Row space of a matrix.
  static VecSubspace row_space(const Matrix& m);

  Field field() const { return basis_.field(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  /// dim x ambient, in RREF.
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vec> basis_vectors() const;

  bool contains(std::span<const Fq> v) const;
  bool contains(const VecSubspace& other) const;
  /// v minus its component along the basis; zero on every pivot coordinate.
  Vec reduce(std::span<const Fq> v) const;
  /// Coordinates in the echelon basis, or nullopt if v is not a member.
  std::optional<Vec> coordinates(std::span<const Fq> v) const;
  /// sum_i coords[i] * basis_i.
  Vec combine(std::span<const Fq> coords) const;

  friend bool operator==(const VecSubspace& a, const VecSubspace& b) {
    return a.basis_ == b.basis_;
  }

 private:
  VecSubspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

VecSubspace sum(const VecSubspace& a, const VecSubspace& b);
/// Zassenhaus intersection.
VecSubspace intersect(const VecSubspace& a, const VecSubspace& b);
/// {phi : phi . v = 0 for all v in s}, dual coordinates paired by dot product.
VecSubspace annihilator(const VecSubspace& s);

/// Concrete chart of F^m / W: the coordinates outside W's pivot set.
class QuotientChart {
 public:
  explicit QuotientChart(VecSubspace w);
  const VecSubspace& kernel() const { return w_; }
  std::size_t dim() const { return kept_.size(); }
  const std::vector<std::size_t>& kept() const { return kept_; }
  Vec project(std::span<const Fq> v) const;
  /// A representative of a quotient vector (zero on W's pivots).
  Vec lift(std::span<const Fq> q) const;

 private:
  VecSubspace w_;
  std::vector<std::size_t> kept_;
};

/// Subspace of rows x cols matrices, flattened row-major.
class MatSubspace {
 public:
  MatSubspace(Field f, std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), flat_(f, rows * cols) {}
  MatSubspace(std::size_t rows, std::size_t cols, VecSubspace flat);
  static MatSubspace span(Field f, std::size_t rows, std::size_t cols, const std::vector<Matrix>& mats);
  static MatSubspace full(Field f, std::size_t rows, std::size_t cols);

  Field field() const { return flat_.field(); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::size_t dim() const { return flat_.dim(); }
  const VecSubspace& flat() const { return flat_; }
  std::vector<Matrix> basis() const;
  Matrix basis_matrix(std::size_t i) const;
  bool contains(const Matrix& m) const;
  bool contains(const MatSubspace& other) const { return flat_.contains(other.flat_); }
  Matrix element(std::span<const Fq> coords) const;
  Matrix reshape(std::span<const Fq> flat) const;

  friend bool operator==(const MatSubspace& a, const MatSubspace& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.flat_ == b.flat_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  VecSubspace flat_;
};

MatSubspace sum(const MatSubspace& a, const MatSubspace& b);
MatSubspace intersect(const MatSubspace& a, const MatSubspace& b);
/// S^perp = {v : tr(v u) = 0 for all u in S}; for S inside rows x cols the
/// result lives in cols x rows.
MatSubspace trace_orthogonal(const MatSubspace& s);
MatSubspace transpose_space(const MatSubspace& s);
/// {p u p^-1 : u in s}.
MatSubspace conjugate_space(const MatSubspace& s, const Matrix& p);
/// {a u : u in s}.
MatSubspace left_multiply(const Matrix& a, const MatSubspace& s);
/// {u a : u in s}.
MatSubspace right_multiply(const MatSubspace& s, const Matrix& a);
/// {phi (x) y : y in F^n} for fixed phi, or {phi (x) y : phi in F^n} for fixed y.
MatSubspace tensors_with_form(Field f, std::span<const Fq> phi);
MatSubspace tensors_with_vector(Field f, std::span<const Fq> y);
/// x^perp (x) x: trace-zero rank <= 1 operators with range F x.
MatSubspace trace_zero_tensors_into(Field f, std::span<const Fq> x);

}  // namespace bspec
