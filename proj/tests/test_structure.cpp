#include <gtest/gtest.h>

#include "bspec/constructions.hpp"
#include "bspec/enumerate.hpp"
#include "bspec/structure.hpp"
#include "oracles.hpp"

using namespace bspec;

namespace {

Vec unit_vec(Field f, std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = f.one();
  return v;
}

const AdaptedPoint& point_of(const AdaptedScanReport& r, const Vec& x) {
  for (const auto& p : r.points)
    if (p.point == x) return p;
  throw std::logic_error("point not scanned");
}

// Projective normalization: scale so the first nonzero entry is 1.
Vec normalized(Field f, Vec v) {
  const auto lead = std::find_if(v.begin(), v.end(), [](Fq x) { return !x.is_zero(); });
  const Fq s = f.inv(*lead);
  for (Fq& x : v) x = f.mul(x, s);
  return v;
}

}  // namespace

TEST(Adapted, NilpotentExamples) {
  const Field f = Field::make(2);
  const AdaptedScanReport r = adapted_scan(nt(f, 3));
  EXPECT_EQ(r.points.size(), 21u);
  EXPECT_EQ(point_of(r, unit_vec(f, 3, 2)).kind, Adaptedness::adapted);
  EXPECT_EQ(point_of(r, unit_vec(f, 3, 0)).intersection_dim, 2u);
  EXPECT_EQ(point_of(r, unit_vec(f, 3, 0)).kind, Adaptedness::neither);
  EXPECT_EQ(r.adapted + r.neither + (r.weakly_adapted - r.adapted), r.points.size());
}

TEST(Adapted, FullSpaceAndHurdleHaveNoAdaptedPoints) {
  const Field f = Field::make(2);
  EXPECT_EQ(adapted_scan(full_space(f, 3)).adapted, 0u);
  const AdaptedScanReport h = adapted_scan(hurdle_template(f, 4));
  EXPECT_EQ(h.points.size(), 85u);
  EXPECT_EQ(h.adapted, 0u);
}

TEST(Adapted, IntersectionMatchesBruteForce) {
  const Field f = Field::make(2);
  Rng rng = trial_rng(61, 0);
  for (int i = 0; i < 20; ++i) {
    const MatSubspace s(3, 3, random_subspace(f, 9, 2 + rng() % 5, rng));
    const Vec x = random_nonzero_vector(f, 3, rng);
    // Count elements of s that are trace-zero with every column in F x.
    const VecSubspace line = VecSubspace::span(f, 3, {x});
    std::uint64_t count = 0;
    for_each_element(s.flat(), 1 << 20, [&](std::span<const Fq> v) {
      const Matrix m = s.reshape(v);
      bool ok = m.trace().is_zero();
      for (std::size_t c = 0; ok && c < 3; ++c) ok = line.contains(m.col(c));
      count += ok;
      return true;
    });
    EXPECT_EQ(count, checked_pow(4, adapted_intersection_dim(s, x)));
  }
}

TEST(Adapted, SimilarityCovariant) {
  const Field f = Field::make(2);
  Rng rng = trial_rng(62, 0);
  for (int i = 0; i < 10; ++i) {
    const MatSubspace s(3, 3, random_subspace(f, 9, 3 + rng() % 4, rng));
    const Matrix p = random_invertible(f, 3, rng);
    const AdaptedScanReport a = adapted_scan(s);
    const AdaptedScanReport b = adapted_scan(conjugate_space(s, p));
    EXPECT_EQ(a.adapted, b.adapted);
    EXPECT_EQ(a.weakly_adapted, b.weakly_adapted);
    for (const auto& pt : a.points)
      EXPECT_EQ(point_of(b, normalized(f, p.apply(pt.point))).intersection_dim, pt.intersection_dim);
  }
}

TEST(Adapted, WorkersDoNotChangeReport) {
  const Field f = Field::make(2);
  Rng rng = trial_rng(63, 0);
  const MatSubspace s(4, 4, random_subspace(f, 16, 7, rng));
  const AdaptedScanReport a = adapted_scan(s, 1);
  const AdaptedScanReport b = adapted_scan(s, 4);
  ASSERT_EQ(a.points.size(), b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) EXPECT_EQ(a.points[i].intersection_dim, b.points[i].intersection_dim);
}

TEST(Hurdle, TensorsEqualTraceZeroMapsKillingG) {
  const Field f = Field::make(2);
  Rng rng = trial_rng(64, 0);
  for (std::size_t n = 2; n <= 5; ++n) {
    const VecSubspace p = random_subspace(f, n, 2, rng);
    const MatSubspace t = hurdle_tensors(p);
    EXPECT_EQ(t.dim(), 2 * n - 1);
    std::vector<Matrix> all;
    for (const Vec& phi : p.basis_vectors())
      for (std::size_t j = 0; j < n; ++j) all.push_back(tensor(f, phi, unit_vec(f, n, j)));
    EXPECT_EQ(t, intersect(MatSubspace::span(f, n, n, all), sl(f, n)));
  }
}

TEST(Hurdle, TemplateCertificate) {
  const Field f = Field::make(2);
  for (std::size_t n = 3; n <= 5; ++n) {
    const HurdleSearch h = detect_hurdle(hurdle_template(f, n));
    ASSERT_EQ(h.status, SearchStatus::found);
    EXPECT_EQ(h.certificate->p, VecSubspace::span(f, n, {unit_vec(f, n, n - 2), unit_vec(f, n, n - 1)}));
    EXPECT_EQ(h.certificate->g, annihilator(h.certificate->p));
    EXPECT_TRUE(is_hurdle_certificate(hurdle_template(f, n), h.certificate->p));
  }
}

TEST(Hurdle, ConjugatesAndNegatives) {
  const Field f = Field::make(2);
  Rng rng = trial_rng(65, 0);
  for (int i = 0; i < 5; ++i) {
    const MatSubspace s = conjugate_space(hurdle_template(f, 4), random_invertible(f, 4, rng));
    const HurdleSearch h = detect_hurdle(s, kDefaultBudget, 2);
    ASSERT_EQ(h.status, SearchStatus::found);
    EXPECT_TRUE(is_hurdle_certificate(s, h.certificate->p));
    EXPECT_EQ(adapted_scan(s).adapted, 0u);
  }
  EXPECT_EQ(detect_hurdle(nt(f, 3)).status, SearchStatus::none);
  EXPECT_EQ(detect_hurdle(nt(f, 3)).candidates, 21u);
  EXPECT_EQ(detect_hurdle(b2m(f, 2)).status, SearchStatus::none);
  EXPECT_EQ(detect_hurdle(sl(f, 3)).status, SearchStatus::found);
  EXPECT_EQ(detect_hurdle(hurdle_template(f, 5), 100).status, SearchStatus::budget);
}

TEST(Transitivity, Ranks) {
  const Field f = Field::make(2);
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(transitive_rank(full_space(f, n)), n);
    EXPECT_EQ(transitive_rank(nt(f, n)), n - 1);
    EXPECT_EQ(image_dim(nt(f, n), unit_vec(f, n, n - 1)), n - 1);
  }
  EXPECT_FALSE(is_intransitive(full_space(f, 3)));
  EXPECT_TRUE(is_intransitive(nt(f, 3)));
}

TEST(Transitivity, RankMatchesBruteForceOverAllVectors) {
  const Field f = Field::make(2);
  Rng rng = trial_rng(66, 0);
  for (int i = 0; i < 20; ++i) {
    const MatSubspace t(3, 2, random_subspace(f, 6, 1 + rng() % 3, rng));
    std::size_t best = 0;
    for (std::uint64_t idx = 1; idx < 16; ++idx) {
      const Vec x = coords_at(f, 2, idx);
      std::vector<Vec> images;
      for (const Matrix& b : t.basis()) images.push_back(b.apply(x));
      best = std::max(best, VecSubspace::span(f, 3, images).dim());
    }
    EXPECT_EQ(transitive_rank(t), best);
  }
}

TEST(Transitivity, VeilOfNilpotent) {
  const Field f = Field::make(2);
  // Killing e_1 leaves strictly upper-triangular maps on the quotient, still intransitive.
  const auto veil = find_intransitivity_veil(nt(f, 3));
  ASSERT_TRUE(veil);
  EXPECT_GT(veil->dim(), 0u);
  EXPECT_LT(veil->dim(), 3u);
  EXPECT_TRUE(is_intransitive(project_space(nt(f, 3), QuotientChart(*veil))));
  EXPECT_FALSE(is_primitively_intransitive(nt(f, 3)));
}

TEST(Alternator, AlternatingOperatorsUseIdentity) {
  const Field f = Field::make(2);
  const MatSubspace t = alts(f, 4);
  EXPECT_TRUE(is_alternator(t, Matrix::identity(f, 4)));
  const AlternatorSearch a = find_alternator(t);
  ASSERT_EQ(a.status, SearchStatus::found);
  EXPECT_EQ(rank(*a.gram), 4u);
  EXPECT_TRUE(is_alternator(t, *a.gram));
}

TEST(Alternator, MatsPPerpHasGramP) {
  const Field f = Field::make(2);
  Rng rng = trial_rng(67, 0);
  for (int i = 0; i < 5; ++i) {
    const Matrix p = random_alternating_invertible(f, 4, rng);
    const MatSubspace t = trace_orthogonal(mats_p(p));
    EXPECT_TRUE(is_alternator(t, p));
    EXPECT_TRUE(alternator_solutions(t).contains(p));
    const AlternatorSearch a = find_alternator(t);
    ASSERT_EQ(a.status, SearchStatus::found);
    EXPECT_EQ(rank(*a.gram), 4u);
  }
}

TEST(Alternator, ScalarLines) {
  const Field f = Field::make(2);
  EXPECT_EQ(find_alternator(scalars(f, 3)).status, SearchStatus::none);
  EXPECT_EQ(find_alternator(scalars(f, 4)).status, SearchStatus::found);
}

TEST(Choice, SpecExample) {
  const Field f = Field::make(2);
  const Matrix m = companion(Poly::from_codes(f, {0, 1, 1}));
  const Poly target = Poly::from_codes(f, {1, 1, 1});
  const ChoiceResult r = choice_solve(m, target, 1);
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_EQ(*r.r, Matrix::from_codes(f, 1, 1, {1}));
  EXPECT_EQ(r.path, "affine");
  const ChoiceSolver s(m, 1);
  EXPECT_EQ(char_poly(s.perturbed(*r.r)), target);
}

TEST(Choice, OwnCharPolyAcceptsZero) {
  const Field f = Field::make(2);
  Rng rng = trial_rng(68, 0);
  for (int i = 0; i < 20; ++i) {
    Matrix m = random_matrix(f, 4, 4, rng);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c + 1 < r; ++c) m(r, c) = Fq(0);
    for (std::size_t r = 1; r < 4; ++r) m(r, r - 1) = random_nonzero(f, rng);
    for (std::size_t p = 1; p <= 3; ++p) {
      const ChoiceResult res = choice_solve(m, char_poly(m), p);
      ASSERT_EQ(res.status, SearchStatus::found);
      EXPECT_EQ(char_poly_berkowitz(ChoiceSolver(m, p).perturbed(*res.r)), char_poly(m));
    }
  }
}

TEST(Choice, RandomTargetsReverify) {
  const Field f = Field::make(3);
  Rng rng = trial_rng(69, 0);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 2 + rng() % 3;
    Matrix m = random_matrix(f, n, n, rng);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c + 1 < r; ++c) m(r, c) = Fq(0);
    for (std::size_t r = 1; r < n; ++r) m(r, r - 1) = random_nonzero(f, rng);
    std::vector<Fq> c(n + 1);
    for (std::size_t k = 0; k + 1 < n; ++k) c[k] = random_element(f, rng);
    c[n - 1] = m.trace();
    c[n] = f.one();
    const Poly target(f, c);
    for (std::size_t p : {std::size_t{1}, n - 1}) {
      const ChoiceResult res = choice_solve(m, target, p);
      ASSERT_EQ(res.status, SearchStatus::found);
      EXPECT_EQ(res.path, "affine");
      EXPECT_EQ(char_poly_berkowitz(ChoiceSolver(m, p).perturbed(*res.r)), target);
    }
  }
}

TEST(Choice, PreconditionsRejected) {
  const Field f = Field::make(2);
  const Matrix m = companion(Poly::from_codes(f, {1, 0, 1, 1}));
  EXPECT_THROW(ChoiceSolver(Matrix(f, 3, 3), 1), std::invalid_argument);
  EXPECT_THROW(ChoiceSolver(m, 0), std::invalid_argument);
  EXPECT_THROW(ChoiceSolver(m, 3), std::invalid_argument);
  EXPECT_THROW(choice_solve(m, Poly::from_codes(f, {0, 0, 0, 1}), 1), std::invalid_argument);
  EXPECT_THROW(choice_solve(m, Poly::from_codes(f, {0, 1, 1}), 1), std::invalid_argument);
}
