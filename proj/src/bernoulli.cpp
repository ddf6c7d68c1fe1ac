#include "psd/bernoulli.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "psd/errors.hpp"
#include "psd/padic.hpp"
#include "psd/primes.hpp"

namespace psd {

namespace {

// Row `row` of Pascal's triangle.
std::vector<BigInt> pascal_row(std::uint64_t row) {
  std::vector<BigInt> out(row + 1);
  out[0] = 1;
  for (std::uint64_t k = 1; k <= row; ++k) out[k] = out[k - 1] * BigInt(row - k + 1) / BigInt(k);
  return out;
}

}  // namespace

BernoulliTable BernoulliTable::compute(std::uint64_t max_n) {
  return BernoulliTable({Rational(1)}).extended(max_n);
}

BernoulliTable BernoulliTable::extended(std::uint64_t max_n) const {
  std::vector<Rational> values = values_;
  values.reserve(max_n + 1);
  for (std::uint64_t n = values.size(); n <= max_n; ++n) {
    const auto row = pascal_row(n + 1);
    Rational acc(0);
    for (std::uint64_t k = 0; k < n; ++k) {
      if (!values[k].is_zero()) acc += Rational(row[k]) * values[k];
    }
    values.push_back(-acc / Rational(BigInt(n + 1)));
  }
  return BernoulliTable(std::move(values));
}

const Rational& BernoulliTable::operator[](std::uint64_t n) const {
  if (n >= values_.size()) {
    throw std::out_of_range("Bernoulli table holds B_0..B_" + std::to_string(max_n()) +
                            ", requested B_" + std::to_string(n));
  }
  return values_[n];
}

RationalPolynomial bernoulli_poly(std::uint64_t n, const BernoulliTable& table) {
  const auto row = pascal_row(n);
  std::vector<Rational> coeffs(n + 1);
  for (std::uint64_t k = 0; k <= n; ++k) coeffs[n - k] = Rational(row[k]) * table[k];
  return RationalPolynomial(std::move(coeffs));
}

SquarefreeProduct clausen_denominator(std::uint64_t n) {
  if (n == 0 || n % 2 != 0) {
    throw PreconditionError("von Staudt-Clausen applies to positive even n");
  }
  std::vector<std::uint64_t> primes;
  for (auto d : divisors(n)) {
    if (is_prime(d + 1)) primes.push_back(d + 1);
  }
  return SquarefreeProduct(std::move(primes));
}

BigInt bernoulli_poly_denominator_direct(std::uint64_t n, const BernoulliTable& table) {
  if (n == 0) throw PreconditionError("denominator of B_n(x) is considered for n >= 1");
  return poly_denominator(bernoulli_poly(n, table));
}

SquarefreeProduct bernoulli_poly_denominator_formula(std::uint64_t n) {
  if (n == 0) throw PreconditionError("denominator of B_n(x) is considered for n >= 1");
  if (n == 1) return SquarefreeProduct({2});

  std::vector<std::uint64_t> primes;
  if (n % 2 == 1) {
    for (auto p : primes_upto((n + 1) / 2)) {
      if (digit_sum(n, p) >= p) primes.push_back(p);
    }
    return SquarefreeProduct(std::move(primes));
  }

  // Both factors are merged into one sorted list; they are disjoint because
  // the second one skips every p with (p-1) | n.
  const auto clausen = clausen_denominator(n);
  const auto candidates = primes_upto(std::max((n + 1) / 3, clausen.max_prime()));
  for (auto p : candidates) {
    if ((n % (p - 1)) == 0) {
      if (clausen.contains(p)) primes.push_back(p);
    } else if (3 * p <= n + 1 && digit_sum(n, p) >= p) {
      primes.push_back(p);
    }
  }
  return SquarefreeProduct(std::move(primes));
}

bool almkvist_meurman_check(std::uint64_t n, std::int64_t h, std::uint64_t k,
                            const BernoulliTable& table) {
  if (k == 0) throw PreconditionError("almkvist_meurman_check requires k >= 1");
  const Rational x(BigInt(static_cast<long>(h)), BigInt(k));
  BigInt scale;
  mpz_pow_ui(scale.get_mpz_t(), BigInt(k).get_mpz_t(), n);
  const Rational value = Rational(scale) * (bernoulli_poly(n, table).eval(x) - table[n]);
  return value.is_integer();
}

}  // namespace psd
