#include <gtest/gtest.h>

#include "bspec/constructions.hpp"
#include "bspec/spectra.hpp"
#include "oracles.hpp"

using namespace bspec;

namespace {

std::size_t binom2(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace

TEST(Constructions, BasicDimensions) {
  const Field f = Field::make(2);
  EXPECT_EQ(nt(f, 4).dim(), 6u);
  EXPECT_EQ(sl(f, 2).dim(), 3u);
  EXPECT_EQ(alts(f, 3).dim(), 3u);
  EXPECT_EQ(syms(f, 3).dim(), 6u);
  EXPECT_EQ(ut(f, 4).dim(), 10u);
  EXPECT_EQ(zero_diagonal(f, 4).dim(), 12u);
  EXPECT_EQ(scalars(f, 5).dim(), 1u);
  EXPECT_EQ(hurdle_template(f, 4).dim(), 7u);
  EXPECT_EQ(b2m(f, 2).dim(), 10u);
  EXPECT_EQ(case_iv_n6(f).dim(), 18u);
}

TEST(Constructions, MembershipMatchesDefinitions) {
  const Field f = Field::make(2);
  Rng rng = trial_rng(51, 0);
  for (int i = 0; i < 200; ++i) {
    const Matrix m = random_matrix(f, 4, 4, rng);
    bool strictly_upper = true, upper = true, symmetric = true, zero_diag = true;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        if (r >= c && !m(r, c).is_zero()) strictly_upper = false;
        if (r > c && !m(r, c).is_zero()) upper = false;
        if (m(r, c) != m(c, r)) symmetric = false;
        if (r == c && !m(r, c).is_zero()) zero_diag = false;
      }
    EXPECT_EQ(nt(f, 4).contains(m), strictly_upper);
    EXPECT_EQ(ut(f, 4).contains(m), upper);
    EXPECT_EQ(syms(f, 4).contains(m), symmetric);
    EXPECT_EQ(alts(f, 4).contains(m), symmetric && zero_diag);
    EXPECT_EQ(zero_diagonal(f, 4).contains(m), zero_diag);
    EXPECT_EQ(sl(f, 4).contains(m), m.trace().is_zero());
  }
}

TEST(Constructions, JointBlocks) {
  const Field f = Field::make(2);
  const MatSubspace j = joint(sl(f, 2), nt(f, 2));
  EXPECT_EQ(j.dim(), 8u);
  EXPECT_EQ(j.dim(), binom2(4) + 2);
  const MatSubspace zz = joint(zero_space(f, 1), zero_space(f, 1));
  EXPECT_EQ(zz, MatSubspace::span(f, 2, 2, {Matrix::unit(f, 2, 2, 0, 1)}));
  for (const Matrix& b : j.basis())
    for (std::size_t r = 2; r < 4; ++r)
      for (std::size_t c = 0; c < 2; ++c) EXPECT_TRUE(b(r, c).is_zero());
  for (std::size_t n = 2; n <= 6; ++n) EXPECT_EQ(joint(sl(f, 2), nt(f, n - 2)).dim(), binom2(n) + 2);
}

TEST(Constructions, LinePlusDimensions) {
  const Field f = Field::make(2);
  for (std::size_t n : {3u, 5u, 6u})
    for (std::size_t k = 0; k + 2 <= n; ++k)
      EXPECT_EQ(line_plus(joint({nt(f, k), sl(f, 2), nt(f, n - k - 2)})).dim(), binom2(n) + 3);
}

TEST(Constructions, B2mEqualsSymmetricPullback) {
  for (unsigned k : {1u, 2u, 3u}) {
    const Field f = Field::make(k);
    for (std::size_t m = 1; m <= 3; ++m) {
      const Matrix kk = symplectic_gram(f, m);
      EXPECT_EQ(b2m(f, m), left_multiply(inverse(kk), syms(f, 2 * m)));
      EXPECT_EQ(b2m(f, m).dim(), m * (2 * m + 1));
    }
  }
}

TEST(Constructions, MatsP) {
  const Field f = Field::make(2);
  Rng rng = trial_rng(52, 0);
  const Matrix p = random_alternating_invertible(f, 4, rng);
  const MatSubspace s = mats_p(p);
  EXPECT_EQ(s, right_multiply(syms(f, 4), p));
  EXPECT_EQ(s.dim(), 10u);
}

TEST(Constructions, CaseIvBlocksAgree) {
  const Field f = Field::make(2);
  for (const Matrix& b : case_iv_n6(f).basis()) {
    EXPECT_EQ(b.block(0, 0, 2, 2), b.block(4, 4, 2, 2));
    EXPECT_TRUE(b.block(2, 2, 2, 2).trace().is_zero());
    EXPECT_TRUE(b.block(2, 0, 4, 2).is_zero());
    EXPECT_TRUE(b.block(4, 2, 2, 2).is_zero());
  }
}

TEST(Constructions, ThirdTemplateShape) {
  const Field f = Field::make(2);
  const MatSubspace t = third_confinement_template(f, 5);
  EXPECT_EQ(t.dim(), 9u);
  for (const Matrix& b : t.basis()) {
    for (std::size_t c = 0; c < 5; ++c) EXPECT_TRUE(b(0, c).is_zero());
    for (std::size_t r = 0; r < 5; ++r) EXPECT_TRUE(b(r, 4).is_zero());
  }
  EXPECT_THROW(third_confinement_template(f, 3), std::invalid_argument);
}

TEST(Constructions, CatalogueDimensionsHold) {
  const Field f = Field::make(2);
  for (const NamedSpace& e : catalogue(f)) EXPECT_EQ(e.space.dim(), e.expected_dim) << e.name;
}

TEST(Constructions, ExpressionParser) {
  const Field f = Field::make(2);
  EXPECT_EQ(build_construction(f, "joint(sl(2),nt(3))", 0), joint(sl(f, 2), nt(f, 3)));
  EXPECT_EQ(build_construction(f, "line_plus(joint(nt(1),sl(2),nt(2)))", 0),
            line_plus(joint({nt(f, 1), sl(f, 2), nt(f, 2)})));
  EXPECT_EQ(build_construction(f, "nt", 5), nt(f, 5));
  EXPECT_EQ(build_construction(f, "b2m(2)", 0), b2m(f, 2));
  EXPECT_EQ(build_construction(f, "hurdle", 4), hurdle_template(f, 4));
  EXPECT_EQ(build_construction(f, "sl2-join-nt", 4), joint(sl(f, 2), nt(f, 2)));
  EXPECT_THROW(build_construction(f, "nosuch", 3), std::invalid_argument);
  EXPECT_THROW(build_construction(f, "joint(sl(2)", 3), std::invalid_argument);
}

TEST(Complex, DimensionPattern) {
  EXPECT_EQ(complex_dimensions(2, 3), (std::vector<std::size_t>{1, 1, 2}));
  EXPECT_EQ(complex_dimensions(3, 2), (std::vector<std::size_t>{1, 1, 1, 2}));
  EXPECT_THROW(complex_dimensions(1, 3), std::invalid_argument);
  const Field f = Field::make(2);
  const ComplexFamily c = make_complex(f, 2, 4, 9);
  ASSERT_EQ(c.spaces.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(c.spaces[i].dim(), complex_dimensions(2, 4)[i]);
  EXPECT_THROW(make_complex(2, 3, {VecSubspace::full(f, 3)}), std::invalid_argument);
}
