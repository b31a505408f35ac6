#pragma once

#include <cstdint>
#include <random>

#include "bspec/subspace.hpp"

namespace bspec {

using Rng = std::mt19937_64;

/// Generator for trial `index` of a run seeded with `seed`; independent of
/// the order in which trials execute.
Rng trial_rng(std::uint64_t seed, std::uint64_t index);

Fq random_element(Field f, Rng& rng);
Fq random_nonzero(Field f, Rng& rng);
Vec random_vector(Field f, std::size_t n, Rng& rng);
Vec random_nonzero_vector(Field f, std::size_t n, Rng& rng);
Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, Rng& rng);
Matrix random_invertible(Field f, std::size_t n, Rng& rng);
/// Alternating (symmetric, zero diagonal) and invertible; n must be even.
Matrix random_alternating_invertible(Field f, std::size_t n, Rng& rng);
/// Uniformly drawn d-dimensional subspace of F^m (rejection on rank).
VecSubspace random_subspace(Field f, std::size_t m, std::size_t d, Rng& rng);
/// Random d-dimensional subspace of s.
VecSubspace random_subspace_of(const VecSubspace& s, std::size_t d, Rng& rng);
/// Random subspace of `outer` of dimension d that contains `inner`.
VecSubspace random_between(const VecSubspace& inner, const VecSubspace& outer, std::size_t d, Rng& rng);
MatSubspace random_between(const MatSubspace& inner, const MatSubspace& outer, std::size_t d, Rng& rng);

}  // namespace bspec
