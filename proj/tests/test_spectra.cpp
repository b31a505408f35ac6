#include <gtest/gtest.h>

#include "bspec/constructions.hpp"
#include "bspec/spectra.hpp"
#include "oracles.hpp"

using namespace bspec;

namespace {

Matrix mat(Field f, std::size_t n, std::initializer_list<std::uint32_t> codes) { return Matrix::from_codes(f, n, n, codes); }

}  // namespace

TEST(Profile, Examples) {
  const Field f = Field::make(2);
  const SpectrumProfile z = profile(Matrix(f, 3, 3));
  EXPECT_EQ(z.distinct_in_field, 1u);
  EXPECT_EQ(z.distinct_nonzero_in_field, 0u);
  const SpectrumProfile id = profile(Matrix::identity(f, 3));
  EXPECT_EQ(id.distinct_in_field, 1u);
  EXPECT_EQ(id.distinct_nonzero_in_field, 1u);
  const SpectrumProfile sq = profile(mat(f, 2, {0, 2, 1, 0}));
  EXPECT_EQ(sq.char_poly, Poly::from_codes(f, {2, 0, 1}));
  EXPECT_EQ(sq.distinct_in_closure, 1u);
  EXPECT_EQ(sq.distinct_in_field, 1u);
}

TEST(Profile, CountsMatchEvaluationOracles) {
  const Field f = Field::make(2);
  const oracle::Closure12 closure(f);
  Rng rng = trial_rng(41, 0);
  for (int i = 0; i < 300; ++i) {
    const Matrix m = random_matrix(f, 3, 3, rng);
    const SpectrumProfile p = profile(m);
    std::size_t in_field = 0, nonzero = 0;
    for (std::uint32_t c = 0; c < 4; ++c)
      if (oracle::char_value(m, Fq(c)).is_zero()) {
        ++in_field;
        nonzero += c != 0;
      }
    ASSERT_EQ(p.distinct_in_field, in_field);
    ASSERT_EQ(p.distinct_nonzero_in_field, nonzero);
    ASSERT_EQ(p.distinct_in_closure, closure.distinct_roots(p.char_poly));
    ASSERT_EQ(p.distinct_nonzero_in_closure, closure.distinct_roots(p.char_poly, true));
  }
}

TEST(SpecPredicate, ParseAndName) {
  for (const char* s : {"1-spec", "2bar-spec", "1*-spec", "1bar*-spec", "0bar*-spec", "3-spec"})
    EXPECT_EQ(SpecPredicate::parse(s).name(), s);
  EXPECT_EQ(SpecPredicate::parse("2barstar-spec"), SpecPredicate::parse("2bar*-spec"));
  const SpecPredicate p = SpecPredicate::parse("2bar*-spec");
  EXPECT_EQ(p.k, 2u);
  EXPECT_TRUE(p.exclude_zero);
  EXPECT_EQ(p.scope, SpectrumScope::in_closure);
  EXPECT_THROW(SpecPredicate::parse("spec"), std::invalid_argument);
  EXPECT_THROW(SpecPredicate::parse("2-spex"), std::invalid_argument);
}

TEST(SpecPredicate, HoldsForAgreesWithProfile) {
  const Field f = Field::make(2);
  Rng rng = trial_rng(42, 0);
  std::vector<SpecPredicate> preds;
  for (const char* s : {"1-spec", "2-spec", "1bar-spec", "2bar-spec", "1*-spec", "1bar*-spec", "2bar*-spec"})
    preds.push_back(SpecPredicate::parse(s));
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 4;
    const Matrix a = random_matrix(f, n, n, rng);
    const SpectrumProfile p = profile(a);
    for (const auto& pred : preds) {
      ASSERT_EQ(pred.holds(p), pred.holds_for(p.char_poly));
      ASSERT_EQ(pred.holds(p), check_element(a, pred));
    }
  }
}

TEST(EvenPoly, Examples) {
  const Field f = Field::make(2);
  EXPECT_TRUE(is_even_poly(Poly::from_codes(f, {1, 0, 2, 0, 1})));
  EXPECT_FALSE(is_even_poly(Poly::from_codes(f, {0, 0, 0, 1})));
  const Matrix k = symplectic_gram(f, 2);
  Rng rng = trial_rng(43, 0);
  const MatSubspace s = syms(f, 4);
  for (int i = 0; i < 1000; ++i) {
    const Matrix u = inverse(k) * s.element(random_vector(f, s.dim(), rng));
    ASSERT_TRUE(is_even_poly(char_poly(u)));
  }
}

TEST(CheckSpace, ExhaustiveVerdicts) {
  const Field f = Field::make(2);
  const SpaceVerdict v = check_space(sl(f, 2), SpecPredicate::parse("1-spec"));
  EXPECT_EQ(v.outcome, Outcome::holds);
  EXPECT_EQ(v.mode, Mode::exhaustive);
  EXPECT_EQ(v.examined, 64u);
  const SpaceVerdict w = check_space(full_space(f, 2), SpecPredicate::parse("1-spec"));
  ASSERT_EQ(w.outcome, Outcome::fails);
  ASSERT_TRUE(w.witness);
  EXPECT_FALSE(check_element(w.witness->matrix, SpecPredicate::parse("1-spec")));
  EXPECT_EQ(w.examined, w.witness->index + 1);
  EXPECT_EQ(full_space(f, 2).element(coords_at(f, 4, w.witness->index)), w.witness->matrix);
}

TEST(CheckSpace, EveryEarlierElementHolds) {
  const Field f = Field::make(2);
  const MatSubspace s = zero_diagonal(f, 3);
  const SpecPredicate pred = SpecPredicate::parse("2-spec");
  const SpaceVerdict v = check_space(s, pred);
  ASSERT_EQ(v.outcome, Outcome::fails);
  for (std::uint64_t i = 0; i < v.witness->index; ++i)
    ASSERT_TRUE(check_element(s.element(coords_at(f, s.dim(), i)), pred));
}

TEST(CheckSpace, SampledModeIsFlagged) {
  const Field f = Field::make(2);
  const SpaceVerdict v = check_space(joint(sl(f, 2), nt(f, 2)), SpecPredicate::parse("1bar*-spec"), {1000, 5000, 3, 1});
  EXPECT_EQ(v.mode, Mode::sampled);
  EXPECT_EQ(v.examined, 5000u);
  EXPECT_EQ(v.outcome, Outcome::holds);
  const SpaceVerdict b = check_space(full_space(f, 3), SpecPredicate::parse("1-spec"), {10, 0, 3, 1});
  EXPECT_EQ(b.outcome, Outcome::budget);
}

TEST(CheckSpace, WorkerCountDoesNotChangeVerdict) {
  const Field f = Field::make(2);
  const SpecPredicate pred = SpecPredicate::parse("2-spec");
  const MatSubspace s = line_plus(joint(sl(f, 2), nt(f, 1)));
  const SpaceVerdict one = check_space(full_space(f, 3), pred, {1 << 12, 20000, 5, 1});
  for (unsigned w : {2u, 4u, 8u}) {
    const SpaceVerdict many = check_space(full_space(f, 3), pred, {1 << 12, 20000, 5, w});
    EXPECT_EQ(many.examined, one.examined);
    ASSERT_TRUE(many.witness && one.witness);
    EXPECT_EQ(many.witness->index, one.witness->index);
    EXPECT_EQ(many.witness->matrix, one.witness->matrix);
    EXPECT_EQ(check_space(s, pred, {1 << 20, 0, 5, w}).examined, check_space(s, pred, {1 << 20, 0, 5, 1}).examined);
  }
}
