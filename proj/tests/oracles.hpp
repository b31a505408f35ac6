#pragma once

// Slow reference implementations used only as test oracles. None of them
// calls into the code under test beyond Field construction and element access.

#include <cstdint>
#include <set>
#include <vector>

#include "bspec/matrix.hpp"
#include "bspec/random.hpp"
#include "bspec/upoly.hpp"

namespace oracle {

using namespace bspec;

/// Shift-and-add product of two codes reduced by the modulus.
inline std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, unsigned degree) {
  std::uint32_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> degree & 1) a ^= modulus;
  }
  return r;
}

inline Fq mul(Field f, Fq a, Fq b) { return Fq(clmul_mod(a.code(), b.code(), f.modulus(), f.degree())); }

/// Laplace expansion along the first row.
inline Fq laplace_det(Field f, const std::vector<std::vector<Fq>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return f.one();
  if (n == 1) return m[0][0];
  Fq acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Fq>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Fq> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    acc += mul(f, m[0][j], laplace_det(f, minor));
  }
  return acc;
}

inline std::vector<std::vector<Fq>> rows_of(const Matrix& m) {
  std::vector<std::vector<Fq>> out(m.rows(), std::vector<Fq>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline Fq laplace_det(const Matrix& m) { return laplace_det(m.field(), rows_of(m)); }

/// det(x I - M) at a field point.
inline Fq char_value(const Matrix& m, Fq x) {
  auto r = rows_of(m);
  for (std::size_t i = 0; i < r.size(); ++i) r[i][i] += x;
  return laplace_det(m.field(), r);
}

/// Distinct roots in the base field, by evaluation at every element.
inline std::size_t roots_by_evaluation(const Poly& p, bool nonzero_only = false) {
  const Field f = p.field();
  std::size_t n = 0;
  for (std::uint32_t c = nonzero_only ? 1 : 0; c < f.order(); ++c) n += p.eval(Fq(c)).is_zero();
  return n;
}

/// Embeds GF(2) or GF(4) into GF(2^12), which contains every root of every
/// polynomial of degree <= 4 over GF(2) and degree <= 3 over GF(4).
class Closure12 {
 public:
  explicit Closure12(Field small) : small_(small), big_(Field::make(12)) {
    if (small.degree() == 2) {
      for (std::uint32_t c = 2; c < big_.order(); ++c) {
        const Fq w(c);
        if ((big_.mul(w, w) + w + big_.one()).is_zero()) {
          omega_ = w;
          break;
        }
      }
    }
  }

  Fq lift(Fq a) const {
    Fq r;
    if (a.code() & 1) r += big_.one();
    if (a.code() & 2) r += omega_;
    return r;
  }

  std::size_t distinct_roots(const Poly& p, bool nonzero_only = false) const {
    std::vector<Fq> coeffs;
    for (Fq c : p.coeffs()) coeffs.push_back(lift(c));
    const Poly big(big_, coeffs);
    std::size_t n = 0;
    for (std::uint32_t c = nonzero_only ? 1 : 0; c < big_.order(); ++c) n += big.eval(Fq(c)).is_zero();
    return n;
  }

 private:
  Field small_;
  Field big_;
  Fq omega_;
};

/// Gaussian binomial by the product formula, for small arguments.
inline std::uint64_t gaussian_product(std::uint64_t q, std::size_t m, std::size_t d) {
  if (d > m) return 0;
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < d; ++i) {
    std::uint64_t a = 1, b = 1;
    for (std::size_t k = 0; k < m - i; ++k) a *= q;
    for (std::size_t k = 0; k < i + 1; ++k) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

/// Rank by counting distinct vectors in the row span (q^rank of them).
inline std::size_t rank_by_span(const Matrix& m) {
  const Field f = m.field();
  std::set<std::vector<std::uint32_t>> seen;
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) combos *= f.order();
  for (std::uint64_t idx = 0; idx < combos; ++idx) {
    std::vector<std::uint32_t> v(m.cols(), 0);
    std::uint64_t x = idx;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const Fq c(static_cast<std::uint32_t>(x % f.order()));
      x /= f.order();
      for (std::size_t j = 0; j < m.cols(); ++j) v[j] ^= mul(f, c, m(i, j)).code();
    }
    seen.insert(v);
  }
  std::size_t r = 0;
  for (std::uint64_t s = 1; s < seen.size(); s *= f.order()) ++r;
  return r;
}

}  // namespace oracle
