#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include <boost/container/small_vector.hpp>

#include "bspec/gf.hpp"

namespace bspec {

/// Univariate polynomial over GF(2^k); coefficient i multiplies t^i and the
/// representation never carries trailing zeros.
class Poly {
 public:
  using Coeffs = boost::container::small_vector<Fq, 16>;

  explicit Poly(Field f) : field_(f) {}
  Poly(Field f, std::span<const Fq> coeffs);
  Poly(Field f, Coeffs coeffs);
  /// Low-to-high coefficient codes, e.g. {1, 0, 1} is t^2 + 1.
  static Poly from_codes(Field f, std::initializer_list<std::uint32_t> codes);
  static Poly constant(Field f, Fq c);
  /// c * t^degree.
  static Poly monomial(Field f, std::size_t degree, Fq c);

  Field field() const { return field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == field_.one(); }
  Fq coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Fq(); }
  Fq leading() const { return c_.empty() ? Fq() : c_.back(); }
  std::span<const Fq> coeffs() const { return {c_.data(), c_.size()}; }

  Fq eval(Fq x) const;
  Poly derivative() const;
  /// Throws DomainError on the zero polynomial.
  Poly monic() const;
  /// Trace of a monic polynomial of degree n: the coefficient of t^(n-1)
  /// (its negation, which is the same thing in characteristic 2).
  Fq trace() const;

  /// "t^3 + 2*t + 1", highest degree first, coefficients as decimal codes.
  std::string to_string() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b) { return a + b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  void trim();
  Field field_;
  Coeffs c_;
};

/// Quotient and remainder; throws DomainError when dividing by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
Poly poly_gcd(const Poly& f, const Poly& g);
/// Monic lcm.
Poly poly_lcm(const Poly& f, const Poly& g);
/// base^e mod m.
Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& m);

/// Number of distinct roots in the base field: deg gcd(f, t^q - t).
std::size_t count_roots_in_field(const Poly& f);
std::size_t count_nonzero_roots_in_field(const Poly& f);
/// Product of the distinct monic irreducible factors of f.
Poly radical(const Poly& f);
/// Number of distinct roots in the algebraic closure: deg radical(f).
std::size_t count_roots_in_closure(const Poly& f);
std::size_t count_nonzero_roots_in_closure(const Poly& f);

/// Parses the textual form produced by Poly::to_string ("t^2 + 3*t + 1").
Poly parse_poly(Field f, std::string_view text);

}  // namespace bspec
