#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bspec/subspace.hpp"

namespace bspec {

MatSubspace zero_space(Field f, std::size_t n);
MatSubspace full_space(Field f, std::size_t n);
/// F I_n.
MatSubspace scalars(Field f, std::size_t n);
/// Strictly upper-triangular matrices.
MatSubspace nt(Field f, std::size_t n);
/// Upper-triangular matrices.
MatSubspace ut(Field f, std::size_t n);
/// Trace-zero matrices.
MatSubspace sl(Field f, std::size_t n);
MatSubspace syms(Field f, std::size_t n);
/// Symmetric with zero diagonal (alternating).
MatSubspace alts(Field f, std::size_t n);
/// Every matrix with zero diagonal.
MatSubspace zero_diagonal(Field f, std::size_t n);

/// Block upper-triangular [[A, B], [0, C]] with A in a, C in c and B free.
MatSubspace joint(const MatSubspace& a, const MatSubspace& c);
MatSubspace joint(const std::vector<MatSubspace>& parts);

/// {0_{n-2}} v sl_2.
MatSubspace hurdle_template(Field f, std::size_t n);
/// [[0, I_m], [I_m, 0]]: the symplectic Gram matrix in characteristic 2.
Matrix symplectic_gram(Field f, std::size_t m);
/// [[A, S2], [S1, A^T]] with A free and S1, S2 symmetric.
MatSubspace b2m(Field f, std::size_t m);
/// T + F I_n.
MatSubspace line_plus(const MatSubspace& t);
/// Mats_n P.
MatSubspace mats_p(const Matrix& p);
/// Subspace of sl2 v sl2 v sl2 whose first and third diagonal blocks agree.
MatSubspace case_iv_n6(Field f);
/// Rows (0 0 0 | 0), (a l y | 0), (b x l | 0), (c b a | 0) and free first
/// three columns below, zero elsewhere; n >= 4.
MatSubspace third_confinement_template(Field f, std::size_t n);

/// Dimensions 1,...,1,2,...,2,... with k repeats per level, (k-1) n spaces.
std::vector<std::size_t> complex_dimensions(std::size_t k, std::size_t n);

struct ComplexFamily {
  std::size_t k = 0;
  std::size_t n = 0;
  std::vector<VecSubspace> spaces;
};

/// Seeded random k-complex of F^n.
ComplexFamily make_complex(Field f, std::size_t k, std::size_t n, std::uint64_t seed);
/// Validates an explicit list against the dimension pattern.
ComplexFamily make_complex(std::size_t k, std::size_t n, std::vector<VecSubspace> spaces);

struct NamedSpace {
  std::string name;
  std::string description;
  MatSubspace space;
  std::size_t expected_dim = 0;
};

/// Every construction with a closed-form dimension, at the sizes the
/// acceptance suite exercises.
std::vector<NamedSpace> catalogue(Field f);

/// Builds a space from an expression such as "joint(sl(2),nt(3))",
/// "line_plus(joint(nt(1),sl(2),nt(2)))", "b2m(2)", "mats_p(4,7)". Bare
/// names ("nt", "hurdle", "sl2-join-nt", "full-mat", ...) take their size
/// from n. Throws std::invalid_argument on unknown names.
MatSubspace build_construction(Field f, std::string_view expr, std::size_t n);

}  // namespace bspec
