#include <gtest/gtest.h>

#include <random>

#include "starq/error.hpp"
#include "starq/scalar.hpp"
#include "print.hpp"

using namespace starq;

namespace {

Scalar S(const char* s) { return parse_scalar(s); }

}  // namespace

TEST(Scalar, SuccExamples) {
  EXPECT_TRUE(succ(3, 1));
  EXPECT_TRUE(succ(0, 0));
  EXPECT_TRUE(succ(S("1/2"), S("-1/2")));
  EXPECT_FALSE(succ(S("c"), S("c-1/2")));
  EXPECT_FALSE(succ(1, 3));
  EXPECT_FALSE(succ(1, 1));
  EXPECT_TRUE(succ(S("c+2"), S("c")));
}

TEST(Scalar, DiffInZExamples) {
  EXPECT_EQ(diff_in_Z(S("5/2"), S("1/2")), 2);
  EXPECT_EQ(diff_in_Z(S("c+3"), S("c")), 3);
  EXPECT_FALSE(diff_in_Z(S("c"), 0).has_value());
  EXPECT_FALSE(diff_in_Z(S("1/3"), 0).has_value());
}

TEST(Scalar, FormalPartNeverStoresZero) {
  Scalar a = S("c+1") - S("c");
  EXPECT_TRUE(a.is_rational());
  EXPECT_TRUE(a.formal().empty());
  EXPECT_EQ(a, Scalar(1));
  EXPECT_TRUE(a.is_integer());
  EXPECT_FALSE(S("c").is_integer());
}

TEST(Scalar, ParseGrammar) {
  EXPECT_EQ(S("c/2-3"), Scalar::param("c", Rational(1, 2)) - Scalar(3));
  EXPECT_EQ(S("2*(c+1)"), Scalar::param("c", 2) + Scalar(2));
  EXPECT_EQ(S("-(a-b)/3"), (Scalar::param("b") - Scalar::param("a")) / Rational(3));
  EXPECT_EQ(S("6/4"), Scalar(Rational(3, 2)));
  EXPECT_THROW(S("c*c"), DomainError);
  EXPECT_THROW(S("1/0"), DomainError);
  EXPECT_THROW(S("1+"), DomainError);
  EXPECT_THROW(S(""), DomainError);
}

TEST(Scalar, RoundTrip) {
  for (const char* s : {"0", "-7", "3/2", "c", "-c", "c+1", "c/2-3", "2*a-b+1/3", "-1/2", "x/3"}) {
    Scalar a = S(s);
    EXPECT_EQ(S(a.str().c_str()), a) << s << " printed as " << a.str();
  }
}

TEST(ScalarProperty, SuccTransitiveOnStrictBranch) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 4);
  for (int t = 0; t < 3000; ++t) {
    Scalar a(Rational(num(rng), den(rng))), b(Rational(num(rng), den(rng))), c(Rational(num(rng), den(rng)));
    if (succ(a, b) && succ(b, c) && !(a == b) && !(b == c) && !b.is_zero() && diff_in_Z(a, c))
      EXPECT_TRUE(succ(a, c)) << a.str() << " " << b.str() << " " << c.str();
  }
}

TEST(ScalarProperty, SuccReflexiveOnlyAtZero) {
  for (const char* s : {"0", "1", "-1/2", "c", "c-c"}) {
    Scalar a = S(s);
    EXPECT_EQ(succ(a, a), a.is_zero()) << s;
  }
}

TEST(ScalarProperty, DiffInZAntisymmetric) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 3), coin(0, 2);
  for (int t = 0; t < 2000; ++t) {
    Scalar a(Rational(num(rng), den(rng))), b(Rational(num(rng), den(rng)));
    if (coin(rng) == 0) a += Scalar::param("c");
    if (coin(rng) == 0) b += Scalar::param("c");
    auto ab = diff_in_Z(a, b), ba = diff_in_Z(b, a);
    ASSERT_EQ(ab.has_value(), ba.has_value());
    if (ab) EXPECT_EQ(*ab, -*ba);
  }
}
