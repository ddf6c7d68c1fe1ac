#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "psd/errors.hpp"
#include "psd/exact_poly.hpp"

using namespace psd;

namespace {

Rational q(long num, long den) { return Rational(BigInt(num), BigInt(den)); }

RationalPolynomial poly(std::vector<Rational> c) { return RationalPolynomial(std::move(c)); }

IntegerPolynomial ipoly(std::vector<long> c) {
  std::vector<BigInt> out;
  for (auto v : c) out.emplace_back(v);
  return IntegerPolynomial(std::move(out));
}

}  // namespace

TEST(Rational, StoredInLowestTerms) {
  const auto r = q(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  const auto zero = q(0, -7);
  EXPECT_EQ(zero.numerator(), 0);
  EXPECT_EQ(zero.denominator(), 1);
  EXPECT_THROW(q(1, 0), PreconditionError);
  EXPECT_THROW(q(1, 2) / Rational(0), PreconditionError);
}

TEST(Rational, Denom) {
  EXPECT_EQ(denom(q(-1, 2)), 2);
  EXPECT_EQ(denom(Rational(7)), 1);
  EXPECT_EQ(denom(q(-691, 2730)), 2730);
}

TEST(Rational, ArithmeticClosureProperty) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  for (int i = 0; i < 2000; ++i) {
    const auto a = q(num(rng), den(rng));
    const auto b = q(num(rng), den(rng));
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) {
      const auto back = (a * b) / b;
      EXPECT_EQ(back, a);
      EXPECT_EQ(gcd(back.numerator(), back.denominator()), 1);
    }
  }
}

TEST(RationalPolynomial, ZeroIsEmpty) {
  const auto z = poly({Rational(0), Rational(0)});
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.coefficients().empty());
  EXPECT_THROW((void)z.degree(), PreconditionError);
  EXPECT_EQ(z.eval(q(3, 5)), Rational(0));
  EXPECT_EQ(poly_denominator(z), 1);
}

TEST(RationalPolynomial, PolyDenominator) {
  EXPECT_EQ(poly_denominator(poly({0, q(1, 2), q(1, 2)})), 2);
  // S_4(x+1) = x^5/5 + x^4/2 + x^3/3 - x/30, checked against an interpolating oracle below.
  const auto s4 = poly({0, q(-1, 30), 0, q(1, 3), q(1, 2), q(1, 5)});
  EXPECT_EQ(poly_denominator(s4), 30);
}

TEST(RationalPolynomial, Eval) {
  const auto tri = poly({0, q(1, 2), q(1, 2)});
  EXPECT_EQ(tri.eval(Rational(4)), Rational(10));
  const auto s4 = poly({0, q(-1, 30), 0, q(1, 3), q(1, 2), q(1, 5)});
  EXPECT_EQ(s4.eval(Rational(2)), Rational(17));
  for (long x = 0; x <= 12; ++x) {
    EXPECT_EQ(s4.eval(Rational(x)), Rational(BigInt(oracle::power_sum(4, x))));
  }
}

TEST(RationalPolynomial, DenominatorIsMinimalProperty) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 60);
  std::uniform_int_distribution<int> len(0, 6);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<Rational> coeffs;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) coeffs.push_back(q(num(rng), den(rng)));
    const auto p = poly(coeffs);
    const BigInt d = poly_denominator(p);
    ASSERT_GT(d, 0);
    const auto integral = [&](const BigInt& s) {
      for (const auto& c : p.coefficients()) {
        if (!(c * Rational(s)).is_integer()) return false;
      }
      return true;
    };
    EXPECT_TRUE(integral(d));
    for (BigInt e = 1; e < d; ++e) {
      if (d % e == 0) EXPECT_FALSE(integral(e)) << "proper divisor " << e << " of " << d;
    }
  }
}

TEST(ContentSplit, FaulhaberForms) {
  const auto a = content_split(poly({0, q(1, 6), q(1, 2), q(1, 3)}));
  EXPECT_EQ(a.scale, q(1, 6));
  EXPECT_EQ(a.primitive, ipoly({0, 1, 3, 2}));

  const auto b = content_split(poly({0, 3}));
  EXPECT_EQ(b.scale, Rational(3));
  EXPECT_EQ(b.primitive, ipoly({0, 1}));

  const auto c = content_split(poly({0, q(-1, 30), 0, q(1, 3), q(1, 2), q(1, 5)}));
  EXPECT_EQ(c.scale, q(1, 30));
  EXPECT_EQ(c.primitive, ipoly({0, -1, 0, 10, 15, 6}));

  EXPECT_THROW((void)content_split(RationalPolynomial{}), PreconditionError);
}

TEST(ContentSplit, RoundTripProperty) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 36);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<Rational> coeffs;
    for (int i = 0; i < 5; ++i) coeffs.push_back(q(num(rng), den(rng)));
    coeffs.push_back(q(num(rng) * 2 + 1, den(rng)));  // nonzero leading coefficient
    const auto p = poly(coeffs);
    const auto split = content_split(p);
    EXPECT_EQ(split.primitive.content(), 1);
    EXPECT_EQ(split.primitive.to_rational() * split.scale, p);
    EXPECT_EQ(split.scale.sign(), p.leading().sign());
  }
}

TEST(Lagrange, SmallCases) {
  const std::vector<Point> line{{0, 0}, {1, 1}, {2, 2}};
  EXPECT_EQ(lagrange_interpolate(line), RationalPolynomial::identity());
  const std::vector<Point> one{{0, 1}};
  EXPECT_EQ(lagrange_interpolate(one), RationalPolynomial::constant(1));
  const std::vector<Point> squares{{0, 0}, {1, 1}, {2, 5}, {3, 14}};
  EXPECT_EQ(lagrange_interpolate(squares), poly({0, q(1, 6), q(1, 2), q(1, 3)}));
  const std::vector<Point> dup{{1, 2}, {3, 4}, {1, 5}};
  EXPECT_THROW((void)lagrange_interpolate(dup), PreconditionError);
}

TEST(Lagrange, ReproducesPointsProperty) {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 9);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<Point> pts;
    for (int i = 0; i < 7; ++i) {
      Rational x = q(num(rng), den(rng));
      bool fresh = true;
      for (const auto& pt : pts) fresh = fresh && !(pt.x == x);
      if (fresh) pts.push_back({x, q(num(rng), den(rng))});
    }
    const auto p = lagrange_interpolate(pts);
    if (!p.is_zero()) EXPECT_LT(p.degree(), pts.size());
    for (const auto& pt : pts) EXPECT_EQ(p.eval(pt.x), pt.y);
  }
}

TEST(Format, Polynomials) {
  std::ostringstream a;
  a << ipoly({0, 0, -1, 0, 5, 6, 2});
  EXPECT_EQ(a.str(), "2x^6 + 6x^5 + 5x^4 - x^2");
  std::ostringstream b;
  b << poly({q(1, 6), -1, 1});
  EXPECT_EQ(b.str(), "x^2 - x + 1/6");
  std::ostringstream c;
  c << RationalPolynomial{};
  EXPECT_EQ(c.str(), "0");
}
