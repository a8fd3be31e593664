#include <gtest/gtest.h>

#include "support.hpp"
#include "trop/semiring.hpp"

using namespace trop;
using namespace trop::test;

namespace {

std::vector<SymNum> small_grid() {
  return {Z, P(0), N(0), B(0), P(1), N(1), B(1), P(-1), N(-1), B(-1)};
}

}  // namespace

TEST(Semiring, Addition) {
  EXPECT_EQ(P(3) + N(3), B(3));
  EXPECT_EQ(P(5) + N(3), P(5));
  EXPECT_EQ(N(5) + P(3), N(5));
  EXPECT_EQ(P(2) + P(2), P(2));
  EXPECT_EQ(B(3) + P(2), B(3));
  EXPECT_EQ(B(3) + N(4), N(4));
  EXPECT_EQ(B(3) + P(3), B(3));
  EXPECT_EQ(Z + N(1), N(1));
}

TEST(Semiring, Multiplication) {
  EXPECT_EQ(N(2) * N(3), P(5));
  EXPECT_EQ(P(2) * N(3), N(5));
  EXPECT_EQ(B(1) * N(2), B(3));
  EXPECT_EQ(Z * P(4), Z);
  EXPECT_EQ(P(0) * N(7), N(7));
}

TEST(Semiring, NegationAbsInverse) {
  EXPECT_EQ(-P(2), N(2));
  EXPECT_EQ(-B(2), B(2));
  EXPECT_EQ(-Z, Z);
  EXPECT_EQ(abs(N(2)), P(2));
  EXPECT_EQ(inverse(N(2)), N(-2));
  EXPECT_EQ(P(3) * inverse(P(3)), P(0));
}

TEST(Semiring, AlgebraicLawsOnGrid) {
  const auto g = small_grid();
  for (const SymNum& x : g) {
    EXPECT_EQ(x + Z, x);
    EXPECT_EQ(x * P(0), x);
    EXPECT_EQ(x * Z, Z);
    EXPECT_TRUE(balance(x - x, Z));
    for (const SymNum& y : g) {
      EXPECT_EQ(x + y, y + x);
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ(-(x + y), (-x) + (-y));
      for (const SymNum& z : g) {
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
      }
    }
  }
}

TEST(Semiring, Relations) {
  EXPECT_TRUE(strict_gt(P(1), N(2)));
  EXPECT_FALSE(strict_gt(N(2), P(1)));
  EXPECT_TRUE(strict_gt(P(0), Z));
  EXPECT_FALSE(strict_gt(P(1), P(1)));
  EXPECT_TRUE(geq(P(1), P(1)));
  EXPECT_TRUE(teq(B(2), P(1)));
  EXPECT_TRUE(teq(P(1), B(1)));
  EXPECT_FALSE(teq(N(1), Z));

  // Balance is not transitive.
  EXPECT_TRUE(balance(P(1), B(1)));
  EXPECT_TRUE(balance(B(1), P(0)));
  EXPECT_FALSE(balance(P(1), P(0)));

  EXPECT_EQ(compare(P(1), P(2)), Ordering::Less);
  EXPECT_EQ(compare(B(1), P(0)), Ordering::Incomparable);
}

TEST(Semiring, SignedOrderIsTotal) {
  const std::vector<SymNum> chain{N(2), N(1), N(-1), Z, P(-1), P(1), P(2)};
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = 0; j < chain.size(); ++j) {
      EXPECT_EQ(signed_less(chain[i], chain[j]), i < j) << i << ' ' << j;
      EXPECT_EQ(strict_gt(chain[i], chain[j]), i > j) << i << ' ' << j;
    }
  }
}

TEST(Semiring, Uncomparable) {
  EXPECT_EQ(uncomp(B(2)), (Interval{N(2), P(2)}));
  EXPECT_EQ(uncomp(P(3)), (Interval{P(3), P(3)}));
  EXPECT_TRUE(uncomp(B(2)).contains(Z));
  EXPECT_TRUE(uncomp(B(2)).contains(N(1)));
  EXPECT_FALSE(uncomp(B(2)).contains(P(3)));
  for (const SymNum& a : small_grid()) {
    for (const SymNum& x : signed_grid(-2, 2)) {
      EXPECT_EQ(uncomp(a).contains(x), compare(a, x) == Ordering::Incomparable || a == x)
          << to_string(a) << ' ' << to_string(x);
    }
  }
}

TEST(Semiring, TextRoundTrip) {
  for (const char* t : {"_", "3", "~3", "*3", "-1", "~-2", "1/2", "~3/4", "*0"}) {
    EXPECT_EQ(to_string(parse_symnum(t)), t);
  }
  EXPECT_EQ(parse_symnum("0.5"), SymNum::pos(Rational(1, 2)));
  EXPECT_EQ(parse_symnum("2/4"), SymNum::pos(Rational(1, 2)));
}

TEST(Semiring, ParseErrors) {
  EXPECT_THROW(parse_symnum(""), ParseError);
  EXPECT_THROW(parse_symnum("~"), ParseError);
  EXPECT_THROW(parse_symnum("abc"), ParseError);
  EXPECT_THROW(parse_symnum("1/0"), ParseError);
}
