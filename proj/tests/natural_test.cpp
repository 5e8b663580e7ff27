#include <gtest/gtest.h>

#include <random>
#include <string>

#include "primechar/natural.hpp"

namespace primechar {
namespace {

TEST(NaturalTest, ParsesAndPrintsDecimal) {
  const std::string big(3000, '7');
  EXPECT_EQ(Natural::from_decimal(big).to_string(), big);
  EXPECT_EQ(Natural::from_decimal("000120").to_string(), "120");
  EXPECT_EQ(Natural::from_decimal("0"), Natural(0));
}

TEST(NaturalTest, RejectsMalformedNumerals) {
  EXPECT_THROW(Natural::from_decimal(""), InvalidArgument);
  EXPECT_THROW(Natural::from_decimal("-3"), InvalidArgument);
  EXPECT_THROW(Natural::from_decimal("1e5"), InvalidArgument);
  EXPECT_THROW(Natural::from_decimal(" 12"), InvalidArgument);
  EXPECT_THROW(Natural(-1), Underflow);
}

TEST(NaturalTest, SubtractionBelowZeroThrows) {
  EXPECT_THROW(Natural(3) - Natural(4), Underflow);
  EXPECT_EQ(Natural(4) - Natural(4), Natural(0));
}

TEST(NaturalTest, DivisionByZeroThrows) {
  EXPECT_THROW(Natural(3) / Natural(0), DivisionByZero);
  EXPECT_THROW(Natural(3) % Natural(0), DivisionByZero);
  EXPECT_THROW(exact_div(3, 0), DivisionByZero);
}

TEST(NaturalTest, ExactDivisionRequiresDivisibility) {
  EXPECT_EQ(exact_div(40320, 18), Natural(2240));
  EXPECT_THROW(exact_div(10, 3), NotDivisible);
}

TEST(NaturalTest, DivisionIdentityOnRandomOperands) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Natural a = pow(Natural(rng() | 1), 1 + rng() % 6) + rng();
    const Natural b = Natural(rng() % 100000 + 1) * (rng() % 3 == 0 ? pow(Natural(10), 30) : 1);
    const Natural q = a / b;
    const Natural r = a % b;
    EXPECT_LT(r, b);
    EXPECT_EQ(q * b + r, a);
  }
}

TEST(NaturalTest, PowAndGcd) {
  EXPECT_EQ(pow(Natural(3), 0), Natural(1));
  EXPECT_EQ(pow(Natural(2), 100).to_string(), "1267650600228229401496703205376");
  EXPECT_EQ(gcd(Natural(2240), Natural(3)), Natural(1));
  EXPECT_EQ(isqrt(Natural(3000)), Natural(54));
  EXPECT_EQ(pow_mod(2, 10, 1000), Natural(24));
  EXPECT_EQ(pow_mod(5, 3, 1), Natural(0));
}

TEST(ResidueClassTest, ReducesAndCompares) {
  const ResidueClass r(15, 4);
  EXPECT_EQ(r.value(), Natural(3));
  EXPECT_EQ(r.modulus(), Natural(4));
  EXPECT_EQ(ResidueClass(7, 4), r);
  EXPECT_NE(ResidueClass(3, 5), r);
  EXPECT_EQ(ResidueClass(12345, 1).value(), Natural(0));
  EXPECT_THROW(ResidueClass(1, 0), InvalidArgument);
}

}  // namespace
}  // namespace primechar
