#include "psd/powersum.hpp"

#include <string>
#include <vector>

#include "psd/errors.hpp"
#include "psd/squarefree.hpp"

namespace psd {

RationalPolynomial power_sum_poly(std::uint64_t n, const BernoulliTable& table) {
  if (n == 0) throw PreconditionError("S_n(x) is defined for n >= 1");
  auto poly = bernoulli_poly(n + 1, table) - RationalPolynomial::constant(table[n + 1]);
  poly *= Rational(1, BigInt(n + 1));
  return poly;
}

RationalPolynomial shifted_power_sum_poly(std::uint64_t n, const BernoulliTable& table) {
  if (n == 0) return RationalPolynomial::identity();
  return power_sum_poly(n, table) + RationalPolynomial::monomial(Rational(1), n);
}

RationalPolynomial power_sum_oracle(std::uint64_t n) {
  std::vector<Point> points;
  points.reserve(n + 2);
  BigInt running = 0;
  for (std::uint64_t i = 0; i <= n + 1; ++i) {
    if (i > 0) {
      BigInt term;
      mpz_ui_pow_ui(term.get_mpz_t(), i, n);
      running += term;
    }
    points.push_back({Rational(BigInt(i)), Rational(running)});
  }
  return lagrange_interpolate(points);
}

BigInt d_n(std::uint64_t n, const BernoulliTable& table) {
  const BigInt d = poly_denominator(shifted_power_sum_poly(n, table));
  if (n >= 1) {
    const BigInt unshifted = poly_denominator(power_sum_poly(n, table));
    if (unshifted != d) {
      throw ArithmeticBug("denominators of S_n(x) and S_n(x+1) differ for n=" + std::to_string(n));
    }
  }
  return d;
}

BigInt q_n_bruteforce(std::uint64_t n, const BernoulliTable& table) {
  const BigInt d = d_n(n, table);
  const BigInt m(n + 1);
  if (d % m != 0) throw ArithmeticBug("n+1 does not divide d_n for n=" + std::to_string(n));
  BigInt q = d / m;
  const auto factors = factor_over_primes(q, n + 1);
  if (!factors.squarefree || !factors.fully_factored) {
    throw ArithmeticBug("q_n is not a squarefree product of primes <= n+1 for n=" +
                        std::to_string(n));
  }
  return q;
}

Rational bound_M(std::uint64_t n) {
  return Rational(BigInt(n + 2), BigInt(n % 2 == 0 ? 2 : 3));
}

RationalPolynomial t_n_poly(std::uint64_t n, const BernoulliTable& table) {
  if (n == 0) throw PreconditionError("T_n(x) is defined for n >= 1");
  std::vector<Rational> coeffs(n + 1);
  BigInt binom = 1;  // binom(n+1, k)
  for (std::uint64_t k = 0; k <= n; ++k) {
    coeffs[n - k] = Rational(binom) * table[k];
    binom = binom * BigInt(n + 1 - k) / BigInt(k + 1);
  }
  return RationalPolynomial(std::move(coeffs));
}

FaulhaberForm faulhaber_form(std::uint64_t n, const BernoulliTable& table) {
  if (n == 0) throw PreconditionError("Faulhaber form is taken for n >= 1");
  const auto split = content_split(shifted_power_sum_poly(n, table));
  if (split.scale.numerator() != 1) {
    throw ArithmeticBug("content of the power sum is not a unit fraction for n=" + std::to_string(n));
  }
  return {n, split.scale.denominator(), split.primitive};
}

}  // namespace psd
