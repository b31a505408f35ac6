#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bspec {

/// Raised when an operation leaves its mathematical domain (inverse of zero,
/// singular conjugator, zero polynomial where a nonzero one is required).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An element of GF(2^k), stored as the bit code of a polynomial of degree < k.
class Fq {
 public:
  constexpr Fq() = default;
  constexpr explicit Fq(std::uint32_t code) : code_(static_cast<std::uint16_t>(code)) {}

  constexpr std::uint32_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  friend constexpr Fq operator+(Fq a, Fq b) { return Fq(a.code_ ^ b.code_); }
  friend constexpr Fq operator-(Fq a, Fq b) { return Fq(a.code_ ^ b.code_); }
  constexpr Fq& operator+=(Fq b) {
    code_ ^= b.code_;
    return *this;
  }
  constexpr Fq& operator-=(Fq b) { return *this += b; }

  friend constexpr bool operator==(Fq, Fq) = default;
  friend constexpr auto operator<=>(Fq, Fq) = default;

 private:
  std::uint16_t code_ = 0;
};

namespace detail {
struct FieldTables;
}

/// Handle to an interned GF(2^k). Copies are a single pointer; the table data
/// lives for the whole process and is immutable, so handles may be shared
/// across threads freely.
class Field {
 public:
  static constexpr unsigned kMaxDegree = 16;

  /// Builds (or fetches) GF(2^degree). Without an explicit modulus the default
  /// table is used. Throws std::invalid_argument for a bad degree or a
  /// reducible modulus.
  static Field make(unsigned degree, std::optional<std::uint32_t> modulus = std::nullopt);

  unsigned degree() const;
  std::uint32_t modulus() const;
  std::uint32_t order() const;

  Fq zero() const { return Fq(0); }
  Fq one() const { return Fq(1); }
  /// Validated conversion from a code; throws std::invalid_argument if out of range.
  Fq element(std::uint32_t code) const;
  bool contains_code(std::uint32_t code) const { return code < order(); }

  Fq mul(Fq a, Fq b) const;
  Fq square(Fq a) const { return mul(a, a); }
  Fq pow(Fq a, std::uint64_t e) const;
  /// Throws DomainError on zero.
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  /// The unique b with b^2 = a, i.e. a^(q/2).
  Fq sqrt(Fq a) const;

  /// "gf4", "gf8", "gf16", "gf2", otherwise "gf2^k".
  std::string name() const;

  friend bool operator==(Field a, Field b) { return a.t_ == b.t_; }

 private:
  explicit Field(const detail::FieldTables* t) : t_(t) {}
  const detail::FieldTables* t_;
};

/// Whether the bit-coded polynomial is irreducible over GF(2) (trial division).
bool is_irreducible_gf2(std::uint32_t poly);
/// Default modulus for GF(2^degree).
std::uint32_t default_modulus(unsigned degree);
/// Parses "gf2", "gf4", "gf8", "gf16" or "gf2^k".
Field parse_field(std::string_view name, std::optional<std::uint32_t> modulus = std::nullopt);

}  // namespace bspec
