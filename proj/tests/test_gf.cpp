#include <gtest/gtest.h>

#include "bspec/gf.hpp"
#include "oracles.hpp"

using namespace bspec;

class FieldDegrees : public ::testing::TestWithParam<unsigned> {};

TEST_P(FieldDegrees, MultiplicationMatchesShiftAndAdd) {
  const Field f = Field::make(GetParam());
  const std::uint32_t q = f.order();
  const std::uint32_t step = q > 64 ? 7 : 1;
  for (std::uint32_t a = 0; a < q; a += step)
    for (std::uint32_t b = 0; b < q; b += step) ASSERT_EQ(f.mul(Fq(a), Fq(b)), oracle::mul(f, Fq(a), Fq(b)));
}

TEST_P(FieldDegrees, InverseSqrtAndPow) {
  const Field f = Field::make(GetParam());
  const std::uint32_t q = f.order();
  for (std::uint32_t a = 1; a < q; ++a) {
    const Fq x(a);
    EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
    EXPECT_EQ(f.square(f.sqrt(x)), x);
    EXPECT_EQ(f.pow(x, q - 1), f.one());
  }
  EXPECT_THROW(f.inv(f.zero()), DomainError);
}

TEST_P(FieldDegrees, DistributiveOnSample) {
  const Field f = Field::make(GetParam());
  Rng rng = trial_rng(3, GetParam());
  for (int i = 0; i < 500; ++i) {
    const Fq a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
    ASSERT_EQ(f.mul(a, b + c), f.mul(a, b) + f.mul(a, c));
    ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
  }
}

INSTANTIATE_TEST_SUITE_P(Small, FieldDegrees, ::testing::Values(1u, 2u, 3u, 4u, 5u, 8u, 10u));

TEST(Field, NamesAndParsing) {
  EXPECT_EQ(Field::make(1).name(), "gf2");
  EXPECT_EQ(Field::make(2).name(), "gf4");
  EXPECT_EQ(parse_field("gf8").order(), 8u);
  EXPECT_EQ(parse_field("gf2^5").order(), 32u);
  EXPECT_EQ(parse_field("gf4"), Field::make(2));
  EXPECT_THROW(parse_field("gf6"), std::invalid_argument);
  EXPECT_THROW(parse_field("q4"), std::invalid_argument);
}

TEST(Field, ModulusValidation) {
  EXPECT_TRUE(is_irreducible_gf2(0b10011));
  EXPECT_FALSE(is_irreducible_gf2(0b10101));
  EXPECT_THROW(Field::make(4, 0b10101), std::invalid_argument);
  const Field alt = Field::make(4, 0b11001);
  EXPECT_EQ(alt.modulus(), 0b11001u);
  EXPECT_EQ(alt.mul(Fq(8), Fq(2)), oracle::mul(alt, Fq(8), Fq(2)));
  EXPECT_THROW(Field::make(0), std::invalid_argument);
  EXPECT_THROW(Field::make(Field::kMaxDegree + 1), std::invalid_argument);
}

TEST(Field, ElementRangeChecked) {
  const Field f = Field::make(2);
  EXPECT_EQ(f.element(3).code(), 3u);
  EXPECT_THROW(f.element(4), std::invalid_argument);
}
