#include <gtest/gtest.h>

#include "bspec/upoly.hpp"
#include "oracles.hpp"

using namespace bspec;

namespace {

Poly random_poly(Field f, int degree, Rng& rng) {
  std::vector<Fq> c;
  for (int i = 0; i < degree; ++i) c.push_back(random_element(f, rng));
  c.push_back(random_nonzero(f, rng));
  return Poly(f, c);
}

// Every polynomial of exact degree d with leading coefficient 1.
std::vector<Poly> all_monic(Field f, int d) {
  std::vector<Poly> out;
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= f.order();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Fq> c;
    std::uint64_t x = idx;
    for (int i = 0; i < d; ++i) {
      c.push_back(Fq(static_cast<std::uint32_t>(x % f.order())));
      x /= f.order();
    }
    c.push_back(f.one());
    out.emplace_back(f, c);
  }
  return out;
}

}  // namespace

TEST(Poly, DivmodReconstructs) {
  const Field f = Field::make(3);
  Rng rng = trial_rng(11, 0);
  for (int i = 0; i < 300; ++i) {
    const Poly a = random_poly(f, static_cast<int>(rng() % 8), rng);
    const Poly b = random_poly(f, static_cast<int>(rng() % 5), rng);
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_THROW(divmod(Poly::from_codes(f, {1}), Poly(f)), DomainError);
}

TEST(Poly, GcdDividesAndScales) {
  const Field f = Field::make(2);
  Rng rng = trial_rng(12, 0);
  for (int i = 0; i < 200; ++i) {
    const Poly a = random_poly(f, static_cast<int>(rng() % 5), rng);
    const Poly b = random_poly(f, static_cast<int>(rng() % 5), rng);
    const Poly c = random_poly(f, 1 + static_cast<int>(rng() % 3), rng);
    const Poly g = poly_gcd(a, b);
    EXPECT_TRUE((a % g).is_zero());
    EXPECT_TRUE((b % g).is_zero());
    EXPECT_EQ(poly_gcd(a * c, b * c), g * c.monic());
    EXPECT_EQ(poly_lcm(a, b) * g, (a * b).monic());
  }
}

TEST(Poly, FieldRootCountsMatchEvaluation) {
  for (unsigned k : {1u, 2u, 3u}) {
    const Field f = Field::make(k);
    for (int d = 1; d <= (k == 3 ? 3 : 4); ++d)
      for (const Poly& p : all_monic(f, d)) {
        ASSERT_EQ(count_roots_in_field(p), oracle::roots_by_evaluation(p)) << p.to_string();
        ASSERT_EQ(count_nonzero_roots_in_field(p), oracle::roots_by_evaluation(p, true)) << p.to_string();
      }
  }
}

TEST(Poly, ClosureRootCountsOverGf2MatchExtensionField) {
  const Field f = Field::make(1);
  const oracle::Closure12 closure(f);
  for (int d = 1; d <= 4; ++d)
    for (const Poly& p : all_monic(f, d)) {
      ASSERT_EQ(count_roots_in_closure(p), closure.distinct_roots(p)) << p.to_string();
      ASSERT_EQ(count_nonzero_roots_in_closure(p), closure.distinct_roots(p, true)) << p.to_string();
    }
}

TEST(Poly, ClosureRootCountsOverGf4MatchExtensionField) {
  const Field f = Field::make(2);
  const oracle::Closure12 closure(f);
  for (int d = 1; d <= 3; ++d)
    for (const Poly& p : all_monic(f, d)) {
      ASSERT_EQ(count_roots_in_closure(p), closure.distinct_roots(p)) << p.to_string();
      ASSERT_EQ(count_nonzero_roots_in_closure(p), closure.distinct_roots(p, true)) << p.to_string();
    }
}

TEST(Poly, RadicalIsSquarefreeWithSameRoots) {
  const Field f = Field::make(2);
  const oracle::Closure12 closure(f);
  Rng rng = trial_rng(13, 0);
  for (int i = 0; i < 100; ++i) {
    const Poly a = random_poly(f, 1, rng).monic();
    const Poly b = random_poly(f, 1 + static_cast<int>(rng() % 2), rng).monic();
    const Poly p = a * a * b;
    const Poly r = radical(p);
    EXPECT_TRUE((p % r).is_zero());
    EXPECT_EQ(poly_gcd(r, r.derivative()).degree(), 0);
    EXPECT_EQ(static_cast<std::size_t>(r.degree()), closure.distinct_roots(p));
  }
  // (t + 1)^2 = t^2 + 1 has a single root even though its derivative vanishes.
  EXPECT_EQ(count_roots_in_closure(Poly::from_codes(f, {1, 0, 1})), 1u);
}

TEST(Poly, TextRoundTrip) {
  const Field f = Field::make(3);
  Rng rng = trial_rng(14, 0);
  for (int i = 0; i < 100; ++i) {
    const Poly p = random_poly(f, static_cast<int>(rng() % 6), rng);
    EXPECT_EQ(parse_poly(f, p.to_string()), p);
  }
  EXPECT_EQ(Poly::from_codes(f, {1, 2, 0, 1}).to_string(), "t^3 + 2*t + 1");
  EXPECT_EQ(parse_poly(f, "t^2+t"), Poly::from_codes(f, {0, 1, 1}));
  EXPECT_THROW(parse_poly(f, "t^2 + 9"), std::invalid_argument);
  EXPECT_THROW(parse_poly(f, "x^2"), std::invalid_argument);
}

TEST(Poly, PowmodMatchesRepeatedProduct) {
  const Field f = Field::make(2);
  const Poly m = Poly::from_codes(f, {2, 1, 0, 1});
  const Poly t = Poly::from_codes(f, {0, 1});
  Poly acc = Poly::from_codes(f, {1});
  for (std::uint64_t e = 0; e < 40; ++e) {
    EXPECT_EQ(poly_powmod(t, e, m), acc % m);
    acc = (acc * t) % m;
  }
}

TEST(Poly, TraceAndMonic) {
  const Field f = Field::make(2);
  const Poly p = Poly::from_codes(f, {1, 3, 2, 1});
  EXPECT_EQ(p.trace(), Fq(2));
  EXPECT_TRUE(Poly::from_codes(f, {1, 2}).monic().is_monic());
  EXPECT_THROW(Poly(f).monic(), DomainError);
}
