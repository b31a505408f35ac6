#include <gtest/gtest.h>

#include "bspec/constructions.hpp"
#include "bspec/json_io.hpp"
#include "bspec/lemmas.hpp"
#include "oracles.hpp"

using namespace bspec;

namespace {

Vec unit_vec(Field f, std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = f.one();
  return v;
}

VecSubspace line(Field f, std::initializer_list<std::uint32_t> codes) {
  Vec v;
  for (auto c : codes) v.push_back(Fq(c));
  return VecSubspace::span(f, v.size(), {v});
}

}  // namespace

TEST(Covering, FourLinesOfThePlaneLeaveOneOut) {
  const Field f = Field::make(2);
  const std::vector<VecSubspace> lines{line(f, {1, 0}), line(f, {0, 1}), line(f, {1, 1}), line(f, {1, 2})};
  const CoverResult r = covering_check(lines, 2);
  ASSERT_EQ(r.status, CoverStatus::uncovered);
  EXPECT_EQ(*r.point, (Vec{Fq(1), Fq(3)}));
  auto all = lines;
  all.push_back(line(f, {1, 3}));
  EXPECT_EQ(covering_check(all, 2).status, CoverStatus::covers);
  EXPECT_EQ(covering_check({VecSubspace::full(f, 3)}, 3).status, CoverStatus::covers);
}

TEST(Vanishing, AxesExampleViolatesHypotheses) {
  const Field f = Field::make(2);
  HomogeneousPoly p{f, 2, {{{1, 1}, f.one()}}};
  const LemmaVerdict v = vanishing_check(p, 2, {line(f, {1, 0}), line(f, {0, 1})});
  EXPECT_EQ(v.verdict, Verdict::hypothesis_violation);
}

TEST(Vanishing, ZeroPolynomialHolds) {
  const Field f = Field::make(2);
  HomogeneousPoly p{f, 3, {}};
  EXPECT_EQ(vanishing_check(p, 2, {line(f, {1, 0, 0})}).verdict, Verdict::holds);
}

TEST(Vanishing, Monomials) {
  EXPECT_EQ(monomials(3, 2).size(), 6u);
  EXPECT_EQ(monomials(2, 3).front(), (std::vector<unsigned>{3, 0}));
  const Field f = Field::make(2);
  HomogeneousPoly p{f, 2, {{{2, 0}, f.one()}, {{0, 1}, f.one()}}};
  EXPECT_FALSE(p.homogeneous_degree().has_value());
}

TEST(HurdleDimension, Bounds) {
  const SpecPredicate one_star = SpecPredicate::parse("1*-spec");
  const SpecPredicate two = SpecPredicate::parse("2-spec");
  EXPECT_EQ(hurdle_dimension_bound(4, one_star), 8u);
  EXPECT_EQ(hurdle_dimension_bound(4, two), 10u);
  EXPECT_EQ(hurdle_dimension_bound(5, two), 13u);
  EXPECT_EQ(hurdle_dimension_bound(3, two), 6u);
}

TEST(Splitting, SlJoinSl) {
  const Field f = Field::make(2);
  const MatSubspace s = joint(sl(f, 2), sl(f, 2));
  const VecSubspace p = VecSubspace::span(f, 4, {unit_vec(f, 4, 2), unit_vec(f, 4, 3)});
  ASSERT_TRUE(is_hurdle_certificate(s, p));
  const LemmaVerdict v = splitting_check(s, p, SpecPredicate::parse("2-spec"));
  EXPECT_EQ(v.verdict, Verdict::holds) << v.detail;
  EXPECT_EQ(v.mode, Mode::exhaustive);
  const LemmaVerdict t = splitting_check(hurdle_template(f, 4), p, SpecPredicate::parse("2-spec"));
  EXPECT_EQ(t.verdict, Verdict::holds) << t.detail;
}

TEST(Splitting, RejectsNonHurdle) {
  const Field f = Field::make(2);
  const VecSubspace p = VecSubspace::span(f, 4, {unit_vec(f, 4, 2), unit_vec(f, 4, 3)});
  EXPECT_EQ(splitting_check(nt(f, 4), p, SpecPredicate::parse("2-spec")).verdict, Verdict::hypothesis_violation);
}

TEST(Splitting, AdaptedBasisStartsWithG) {
  const Field f = Field::make(2);
  Rng rng = trial_rng(71, 0);
  const VecSubspace p = random_subspace(f, 5, 2, rng);
  const Matrix q = hurdle_adapted_basis(p);
  EXPECT_FALSE(det(q).is_zero());
  const VecSubspace g = annihilator(p);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(g.contains(q.col(j)));
}

TEST(Confinement, ThirdTemplate) {
  const Field f = Field::make(2);
  const LemmaVerdict v = third_confinement_check(third_confinement_template(f, 5), {1 << 22, 1000, 1, 1});
  EXPECT_EQ(v.verdict, Verdict::holds) << v.detail;
  EXPECT_EQ(v.mode, Mode::exhaustive);
}

TEST(Confinement, SecondFamilyIsTraceZeroAndKillsG) {
  const Field f = Field::make(2);
  const VecSubspace g = VecSubspace::span(f, 4, {unit_vec(f, 4, 0), unit_vec(f, 4, 1)});
  const Vec eta = unit_vec(f, 4, 1);
  const MatSubspace fam = second_confinement_family(g, eta);
  EXPECT_GT(fam.dim(), 0u);
  for (const Matrix& u : fam.basis()) {
    EXPECT_TRUE(u.trace().is_zero());
    for (const Vec& x : g.basis_vectors())
      for (Fq c : u.apply(x)) EXPECT_TRUE(c.is_zero());
    for (std::size_t j = 0; j < 4; ++j) EXPECT_TRUE(dot(f, eta, u.col(j)).is_zero());
  }
}

TEST(Lastblock, Examples) {
  const Field f = Field::make(2);
  // E_{1,3}: zero last row, rank one, trace zero.
  const LemmaVerdict v = lastblock_check(Matrix::unit(f, 3, 3, 0, 2));
  EXPECT_NE(v.verdict, Verdict::fails);
  EXPECT_EQ(lastblock_check(Matrix::identity(f, 3)).verdict, Verdict::hypothesis_violation);
}

TEST(DiagonalZero, WitnessRootsAndZeroDiagonal) {
  const Field f = Field::make(3);
  const Fq a(2), b(5);
  for (std::size_t n = 3; n <= 5; ++n) {
    const Matrix w = diagonal_zero_witness(f, n, a, b);
    for (std::size_t i = 0; i < n; ++i) EXPECT_TRUE(w(i, i).is_zero());
    const Poly chi = char_poly(w);
    for (Fq r : {a, b, a + b}) EXPECT_TRUE(chi.eval(r).is_zero());
    EXPECT_EQ(chi.eval(Fq(0)).is_zero(), n > 3);
    EXPECT_EQ(count_roots_in_field(chi), n > 3 ? 4u : 3u);
    EXPECT_EQ(diagonal_zero_check(zero_diagonal(f, n), a, b).verdict, Verdict::holds);
  }
}

TEST(Identities, RankOneTraceZeroSpanIsSl) {
  const Field f = Field::make(2);
  for (std::size_t n = 2; n <= 4; ++n) EXPECT_EQ(rank_one_trace_zero_span(f, n), sl(f, n));
}

TEST(Identities, TraceOrthoAndTransrank) {
  const Field f = Field::make(2);
  Rng rng = trial_rng(72, 0);
  for (int i = 0; i < 40; ++i) {
    const MatSubspace s(3, 3, random_subspace(f, 9, rng() % 10, rng));
    const VecSubspace v0 = random_subspace(f, 3, rng() % 4, rng);
    EXPECT_TRUE(trace_ortho_first(s, v0).holds());
    EXPECT_TRUE(trace_ortho_second(s, v0).holds());
    EXPECT_TRUE(transrank_identity(s, random_nonzero_vector(f, 3, rng)).holds());
  }
}

TEST(Harness, NamesAndUnknown) {
  const auto names = harness_names();
  EXPECT_NE(std::find(names.begin(), names.end(), "splitting"), names.end());
  EXPECT_THROW(run_harness("nosuch", {}), std::invalid_argument);
}

TEST(Harness, DeterministicAcrossWorkers) {
  for (const char* name : {"transrank", "hurdle-dim", "confinement-first"}) {
    HarnessOptions o;
    o.trials = 40;
    o.seed = 5;
    const json a = HarnessReport(run_harness(name, o));
    o.workers = 4;
    const json b = HarnessReport(run_harness(name, o));
    EXPECT_EQ(a.dump(), b.dump()) << name;
  }
}

TEST(Harness, TransrankSeedSeven) {
  HarnessOptions o;
  o.seed = 7;
  const HarnessReport r = run_harness("transrank", o);
  EXPECT_EQ(r.instances, 200u);
  EXPECT_EQ(r.held, 200u);
}

TEST(Harness, EveryHarnessPassesSmallRun) {
  for (const std::string& name : harness_names()) {
    HarnessOptions o;
    o.trials = 24;
    o.seed = 3;
    const HarnessReport r = run_harness(name, o);
    EXPECT_EQ(r.failed, 0u) << name;
    EXPECT_EQ(r.over_budget, 0u) << name;
    EXPECT_GT(r.held, 0u) << name;
  }
}
