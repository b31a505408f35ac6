#include "bspec/random.hpp"

#include <stdexcept>

#include "bspec/enumerate.hpp"

namespace bspec {

Rng trial_rng(std::uint64_t seed, std::uint64_t index) { return Rng(stream_seed(seed, index)); }

Fq random_element(Field f, Rng& rng) {
  return Fq(static_cast<std::uint32_t>(rng() & (f.order() - 1)));
}

Fq random_nonzero(Field f, Rng& rng) {
  for (;;) {
    const Fq x = random_element(f, rng);
    if (!x.is_zero()) return x;
  }
}

Vec random_vector(Field f, std::size_t n, Rng& rng) {
  Vec v(n);
  for (auto& x : v) x = random_element(f, rng);
  return v;
}

Vec random_nonzero_vector(Field f, std::size_t n, Rng& rng) {
  if (n == 0) throw std::invalid_argument("no nonzero vector in a zero space");
  for (;;) {
    Vec v = random_vector(f, n, rng);
    for (Fq x : v)
      if (!x.is_zero()) return v;
  }
}

Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (auto& x : m.entries()) x = random_element(f, rng);
  return m;
}

Matrix random_invertible(Field f, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m = random_matrix(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

Matrix random_alternating_invertible(Field f, std::size_t n, Rng& rng) {
  if (n % 2 != 0) throw std::invalid_argument("alternating invertible matrices need even size");
  for (;;) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) m(i, j) = m(j, i) = random_element(f, rng);
    if (rank(m) == n) return m;
  }
}

VecSubspace random_subspace(Field f, std::size_t m, std::size_t d, Rng& rng) {
  return random_subspace_of(VecSubspace::full(f, m), d, rng);
}

VecSubspace random_subspace_of(const VecSubspace& s, std::size_t d, Rng& rng) {
  return random_between(VecSubspace(s.field(), s.ambient()), s, d, rng);
}

VecSubspace random_between(const VecSubspace& inner, const VecSubspace& outer, std::size_t d, Rng& rng) {
  if (!outer.contains(inner) || d < inner.dim() || d > outer.dim())
    throw std::invalid_argument("random_between: no subspace with the requested dimension");
  VecSubspace cur = inner;
  while (cur.dim() < d) {
    const Vec v = outer.combine(random_vector(outer.field(), outer.dim(), rng));
    if (!cur.contains(v)) cur = sum(cur, VecSubspace::span(cur.field(), cur.ambient(), {v}));
  }
  return cur;
}

MatSubspace random_between(const MatSubspace& inner, const MatSubspace& outer, std::size_t d, Rng& rng) {
  return MatSubspace(outer.rows(), outer.cols(), random_between(inner.flat(), outer.flat(), d, rng));
}

}  // namespace bspec
