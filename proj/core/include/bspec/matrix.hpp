#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "bspec/gf.hpp"
#include "bspec/upoly.hpp"

namespace bspec {

using Vec = std::vector<Fq>;

/// Dense row-major matrix over GF(2^k).
class Matrix {
 public:
  using Storage = boost::container::small_vector<Fq, 36>;

  Matrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols), e_(rows * cols) {}
  Matrix(Field f, std::size_t rows, std::size_t cols, std::span<const Fq> entries);
  static Matrix from_codes(Field f, std::size_t rows, std::size_t cols,
                           std::initializer_list<std::uint32_t> codes);
  static Matrix from_codes(Field f, std::size_t rows, std::size_t cols, std::span<const std::uint32_t> codes);
  static Matrix identity(Field f, std::size_t n);
  /// The matrix unit E_{i,j} (0-based indices).
  static Matrix unit(Field f, std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Fq operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  Fq& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  std::span<const Fq> entries() const { return {e_.data(), e_.size()}; }
  std::span<Fq> entries() { return {e_.data(), e_.size()}; }
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  Matrix transpose() const;
  /// Throws std::invalid_argument if not square.
  Fq trace() const;
  Matrix scaled(Fq s) const;
  Vec apply(std::span<const Fq> x) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  std::string to_string() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b) { return a + b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  Storage e_;
};

struct RowEchelon {
  Matrix form;
  /// Pivot column of each nonzero row, strictly increasing.
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Fq det(const Matrix& m);
/// Throws DomainError if singular.
Matrix inverse(const Matrix& m);
std::optional<Matrix> try_inverse(const Matrix& m);
/// Rows form a basis (in RREF) of {x : m x = 0}.
Matrix nullspace(const Matrix& m);

/// det(tI - M) by Hessenberg reduction with pivoting.
Poly char_poly(const Matrix& m);
Poly char_poly_hessenberg(const Matrix& m);
/// Hessenberg path on raw row-major entries of an n x n matrix.
Poly char_poly_of(Field f, std::size_t n, std::span<const Fq> entries);
/// det(tI - M) by the division-free Berkowitz recurrence.
Poly char_poly_berkowitz(const Matrix& m);
/// lcm of the Krylov annihilators of the standard basis vectors.
Poly min_poly(const Matrix& m);
/// Polynomial evaluated at a square matrix.
Matrix eval_at(const Poly& p, const Matrix& m);

/// Subdiagonal of ones and last column a_0..a_{n-1}, where r = t^n - sum a_k t^k.
Matrix companion(const Poly& r);
/// The rank <= 1 map x -> phi(x) y, i.e. the matrix y * phi.
Matrix tensor(Field f, std::span<const Fq> phi, std::span<const Fq> y);
/// p m p^-1; throws DomainError if p is singular.
Matrix conjugate(const Matrix& m, const Matrix& p);
/// m_{i,j} = 0 for i > j+1 and every subdiagonal entry nonzero.
bool is_regular_hessenberg(const Matrix& m);

Fq dot(Field f, std::span<const Fq> a, std::span<const Fq> b);

}  // namespace bspec
