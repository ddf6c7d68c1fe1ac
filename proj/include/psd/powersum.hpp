#pragma once

// Power-sum polynomials and their denominators, computed the slow way:
// build the polynomial exactly, then read its denominator.
//
// Two normalizations are kept apart on purpose:
//   power_sum_poly(n)          = 1^n + ... + (x-1)^n   (n >= 1)
//   shifted_power_sum_poly(n)  = 1^n + ... + x^n       (n >= 0)

#include <cstdint>

#include "psd/bernoulli.hpp"
#include "psd/exact_poly.hpp"

namespace psd {

/// (B_{n+1}(x) - B_{n+1}) / (n+1). Needs table.max_n() >= n+1.
[[nodiscard]] RationalPolynomial power_sum_poly(std::uint64_t n, const BernoulliTable& table);

/// power_sum_poly(n) + x^n; for n = 0 this is the polynomial x.
[[nodiscard]] RationalPolynomial shifted_power_sum_poly(std::uint64_t n, const BernoulliTable& table);

/// Interpolates (i, 1^n + ... + i^n) for i = 0..n+1 with integer sums only.
/// Shares nothing with the Bernoulli route.
[[nodiscard]] RationalPolynomial power_sum_oracle(std::uint64_t n);

/// d_n, the denominator of 1^n + ... + x^n. For n >= 1 the denominator of the
/// unshifted polynomial is computed too and must agree.
[[nodiscard]] BigInt d_n(std::uint64_t n, const BernoulliTable& table);

/// d_n / (n+1), after checking that (n+1) | d_n and the quotient is squarefree.
[[nodiscard]] BigInt q_n_bruteforce(std::uint64_t n, const BernoulliTable& table);

/// (n+2)/2 for even n, (n+2)/3 for odd n.
[[nodiscard]] Rational bound_M(std::uint64_t n);

/// p <= M_n in integer arithmetic.
[[nodiscard]] constexpr bool within_bound_M(std::uint64_t p, std::uint64_t n) {
  return n % 2 == 0 ? 2 * p <= n + 2 : 3 * p <= n + 2;
}

/// sum_{k=0}^{n} binom(n+1, k) B_k x^(n-k), the monic (n+1) S_n(x) / x.
[[nodiscard]] RationalPolynomial t_n_poly(std::uint64_t n, const BernoulliTable& table);

/// 1^n + ... + x^n = p_n(x) / d_n with p_n in Z[x] having coprime coefficients.
struct FaulhaberForm {
  std::uint64_t n = 0;
  BigInt d;
  IntegerPolynomial p_poly;
};

[[nodiscard]] FaulhaberForm faulhaber_form(std::uint64_t n, const BernoulliTable& table);

}  // namespace psd
