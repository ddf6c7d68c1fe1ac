#include "psd/exact_poly.hpp"

#include <algorithm>
#include <string>

#include "psd/errors.hpp"

namespace psd {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw PreconditionError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw PreconditionError("division by zero rational");
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& r) { return Rational(mpq_class(-r.value_)); }

BigInt denom(const Rational& r) { return r.denominator(); }

// ---------------------------------------------------------------------------

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return RationalPolynomial(std::move(coeffs));
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t RationalPolynomial::degree() const {
  if (coeffs_.empty()) throw PreconditionError("zero polynomial has no degree");
  return coeffs_.size() - 1;
}

Rational RationalPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational RationalPolynomial::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational RationalPolynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPolynomial(std::move(out));
}

namespace {

// Renders sum c_i x^i from highest degree down, e.g. "2x^3 - x + 1/2".
// Non-integer coefficients of nonconstant terms are parenthesized.
template <typename Coeff, typename Sign, typename Abs, typename Str>
void write_terms(std::ostream& os, std::span<const Coeff> coeffs, Sign sign_of, Abs abs_of,
                 Str str_of) {
  if (coeffs.empty()) {
    os << '0';
    return;
  }
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Coeff& c = coeffs[k];
    const int s = sign_of(c);
    if (s == 0) continue;
    if (first) {
      if (s < 0) os << '-';
    } else {
      os << (s < 0 ? " - " : " + ");
    }
    first = false;
    const Coeff mag = abs_of(c);
    const std::string text = str_of(mag);
    if (k == 0) {
      os << text;
      continue;
    }
    if (text != "1") {
      if (text.find('/') != std::string::npos) {
        os << '(' << text << ')';
      } else {
        os << text;
      }
    }
    os << 'x';
    if (k > 1) os << '^' << k;
  }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p) {
  write_terms<Rational>(
      os, p.coefficients(), [](const Rational& c) { return c.sign(); },
      [](const Rational& c) { return c.sign() < 0 ? -c : c; },
      [](const Rational& c) { return c.to_string(); });
  return os;
}

// ---------------------------------------------------------------------------

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntegerPolynomial::degree() const {
  if (coeffs_.empty()) throw PreconditionError("zero polynomial has no degree");
  return coeffs_.size() - 1;
}

BigInt IntegerPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigInt IntegerPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt IntegerPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

RationalPolynomial IntegerPolynomial::to_rational() const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(c);
  return RationalPolynomial(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const IntegerPolynomial& p) {
  write_terms<BigInt>(
      os, p.coefficients(), [](const BigInt& c) { return sgn(c); },
      [](const BigInt& c) { return BigInt(abs(c)); }, [](const BigInt& c) { return c.get_str(); });
  return os;
}

// ---------------------------------------------------------------------------

BigInt poly_denominator(const RationalPolynomial& p) {
  BigInt d = 1;
  for (const auto& c : p.coefficients()) d = lcm(d, c.denominator());
  return d;
}

ContentSplit content_split(const RationalPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("no content decomposition");
  const BigInt d = poly_denominator(p);
  std::vector<BigInt> scaled;
  scaled.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    scaled.push_back(c.numerator() * (d / c.denominator()));
  }
  BigInt g = 0;
  for (const auto& c : scaled) g = gcd(g, c);
  if (p.leading().sign() < 0) g = -g;
  for (auto& c : scaled) c /= g;
  return {Rational(g, d), IntegerPolynomial(std::move(scaled))};
}

RationalPolynomial lagrange_interpolate(std::span<const Point> points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i].x == points[j].x) {
        throw PreconditionError("duplicate interpolation node " + points[i].x.to_string());
      }
    }
  }
  if (n == 0) return {};

  // master(x) = prod (x - x_i), coefficients little-endian, degree n
  std::vector<Rational> master{Rational(1)};
  for (const auto& pt : points) {
    std::vector<Rational> next(master.size() + 1);
    for (std::size_t k = 0; k < master.size(); ++k) {
      next[k + 1] += master[k];
      next[k] -= master[k] * pt.x;
    }
    master = std::move(next);
  }

  std::vector<Rational> result(n);
  std::vector<Rational> basis(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (points[i].y.is_zero()) continue;
    const Rational& xi = points[i].x;
    // basis = master / (x - xi), synthetic division from the top
    Rational carry(0);
    for (std::size_t k = n; k-- > 0;) {
      carry = master[k + 1] + carry * xi;
      basis[k] = carry;
    }
    Rational weight(1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) weight *= xi - points[j].x;
    }
    const Rational factor = points[i].y / weight;
    for (std::size_t k = 0; k < n; ++k) result[k] += basis[k] * factor;
  }
  return RationalPolynomial(std::move(result));
}

}  // namespace psd
