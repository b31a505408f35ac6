#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bspec/subspace.hpp"

namespace bspec {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

enum class EnumStatus { completed, stopped, budget };

/// base^exp, or nullopt once the value exceeds 2^62.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::size_t exp);

// Elements. Index i encodes the coordinates in base q with the last
// coordinate as the least significant digit (lexicographic order).

std::optional<std::uint64_t> element_count(const VecSubspace& s);
Vec coords_at(Field f, std::size_t dim, std::uint64_t index);
Vec element_at(const VecSubspace& s, std::uint64_t index);

/// Odometer over the elements of a subspace from a starting index; each step
/// adds a single scaled basis vector per changed digit.
class ElementStream {
 public:
  ElementStream(const VecSubspace& s, std::uint64_t start);
  std::span<const Fq> value() const { return value_; }
  std::span<const Fq> coords() const { return coords_; }
  void advance();

 private:
  const VecSubspace* s_;
  std::uint32_t q_;
  Vec coords_;
  Vec value_;
};

EnumStatus for_each_element(const VecSubspace& s, std::uint64_t budget,
                            const std::function<bool(std::span<const Fq>)>& visit);

// Projective points: one representative per line, normalized so that its
// first nonzero coordinate is 1, ordered by that position and then
// lexicographically.

std::optional<std::uint64_t> projective_count(std::uint64_t q, std::size_t m);
Vec projective_coords_at(Field f, std::size_t m, std::uint64_t index);
/// The index-th projective point of a subspace (through its echelon basis,
/// which preserves the normalization).
Vec projective_point_at(const VecSubspace& s, std::uint64_t index);
EnumStatus for_each_projective(const VecSubspace& s, std::uint64_t budget,
                               const std::function<bool(std::span<const Fq>)>& visit);
std::vector<Vec> projective_points(Field f, std::size_t m);

// Grassmannian: d-dimensional subspaces of F^m by echelon form, ordered by
// pivot set (lexicographic) and then by the free entries.

std::optional<std::uint64_t> gaussian_binomial(std::uint64_t q, std::size_t m, std::size_t d);
VecSubspace grassmannian_at(Field f, std::size_t m, std::size_t d, std::uint64_t index);
EnumStatus for_each_grassmannian(Field f, std::size_t m, std::size_t d, std::uint64_t budget,
                                 const std::function<bool(const VecSubspace&)>& visit);

// Counter-based sampling: sample i depends only on (seed, i).

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);
Vec sample_coords(Field f, std::size_t dim, std::uint64_t seed, std::uint64_t index);

}  // namespace bspec
