#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace psd {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(unsigned long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}            // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}
  /// Throws PreconditionError on a zero denominator.
  Rational(const BigInt& numerator, const BigInt& denominator);

  [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] std::string to_string() const { return value_.get_str(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws PreconditionError when rhs is zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& r);

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_{0};
};

/// Denominator of r in lowest terms; 1 for integers.
BigInt denom(const Rational& r);

/// Dense univariate polynomial over Rational. Index i is the coefficient of
/// x^i; the zero polynomial has no coefficients and no trailing zeros are
/// ever stored.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  static RationalPolynomial constant(const Rational& c);
  /// c * x^power
  static RationalPolynomial monomial(const Rational& c, std::size_t power);
  static RationalPolynomial identity() { return monomial(Rational(1), 1); }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Degree of a nonzero polynomial. Throws PreconditionError for zero.
  [[nodiscard]] std::size_t degree() const;
  [[nodiscard]] std::span<const Rational> coefficients() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  [[nodiscard]] Rational coeff(std::size_t i) const;
  [[nodiscard]] Rational leading() const;
  [[nodiscard]] Rational eval(const Rational& x) const;

  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator-=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const Rational& scalar);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
  friend RationalPolynomial operator*(const Rational& s, RationalPolynomial a) { return a *= s; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  friend std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p);

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Polynomial with integer coefficients, same layout as RationalPolynomial.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<BigInt> coeffs);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] std::size_t degree() const;
  [[nodiscard]] std::span<const BigInt> coefficients() const { return coeffs_; }
  [[nodiscard]] BigInt coeff(std::size_t i) const;
  [[nodiscard]] BigInt eval(const BigInt& x) const;
  /// gcd of all coefficients; 0 for the zero polynomial.
  [[nodiscard]] BigInt content() const;
  [[nodiscard]] RationalPolynomial to_rational() const;

  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

  /// Renders as e.g. "2x^6 + 6x^5 + 5x^4 - x^2".
  friend std::ostream& operator<<(std::ostream& os, const IntegerPolynomial& p);

 private:
  std::vector<BigInt> coeffs_;
};

/// Least d > 0 such that d * p has integer coefficients (lcm of the
/// coefficient denominators). 1 for the zero polynomial.
BigInt poly_denominator(const RationalPolynomial& p);

struct ContentSplit {
  Rational scale;
  IntegerPolynomial primitive;
};

/// Writes p = scale * primitive where primitive has coprime integer
/// coefficients and a positive leading coefficient.
ContentSplit content_split(const RationalPolynomial& p);

struct Point {
  Rational x;
  Rational y;
};

/// The unique polynomial of degree < points.size() through every point.
/// Throws PreconditionError on repeated x-coordinates.
RationalPolynomial lagrange_interpolate(std::span<const Point> points);

}  // namespace psd
