#pragma once

// Base-p digit machinery: expansions, digit sums, valuations of factorials
// and binomials, Lucas residues, Fine's row count and the digit-filling
// witness used to exhibit a binomial binom(m, j(p-1)) that p does not divide.

#include <cstdint>
#include <vector>

#include "psd/exact_poly.hpp"

namespace psd {

/// Little-endian base-p digits of a nonnegative integer. Zero has no digits;
/// otherwise the top digit is nonzero.
struct DigitExpansion {
  std::uint64_t p = 2;
  std::vector<std::uint64_t> digits;

  [[nodiscard]] std::uint64_t value() const;
  [[nodiscard]] std::uint64_t digit_sum() const;
  /// Digit at position j, zero past the end.
  [[nodiscard]] std::uint64_t at(std::size_t j) const { return j < digits.size() ? digits[j] : 0; }

  friend bool operator==(const DigitExpansion&, const DigitExpansion&) = default;
};

/// Throws PreconditionError("not a prime base") unless p is prime.
void require_prime_base(std::uint64_t p);

[[nodiscard]] DigitExpansion digits(std::uint64_t x, std::uint64_t p);

/// s_p(x), the base-p digit sum.
[[nodiscard]] std::uint64_t digit_sum(std::uint64_t x, std::uint64_t p);

/// v_p(x!) = (x - s_p(x)) / (p - 1).
[[nodiscard]] std::uint64_t legendre_valuation_factorial(std::uint64_t x, std::uint64_t p);

/// v_p(binom(m, k)) = (s_p(k) + s_p(m - k) - s_p(m)) / (p - 1).
[[nodiscard]] std::uint64_t binomial_valuation(std::uint64_t m, std::uint64_t k, std::uint64_t p);

/// binom(m, k) mod p as a product of digitwise binomials. Returns 0 when k > m.
[[nodiscard]] std::uint64_t lucas_binom_mod(std::uint64_t m, std::uint64_t k, std::uint64_t p);

/// Number of k in [0, m] with binom(m, k) not divisible by p, i.e. the
/// product of (digit + 1) over the base-p digits of m.
[[nodiscard]] std::uint64_t fine_count(std::uint64_t m, std::uint64_t p);

/// Result of distributing p - 1 "marbles" over the base-p digit positions of m.
struct MarbleWitness {
  std::uint64_t m = 0;
  std::uint64_t p = 0;
  std::uint64_t j = 0;  ///< b / (p - 1), in [1, floor((m - 1)/(p - 1))]
  std::uint64_t b = 0;  ///< j (p - 1)
  /// Digits of b padded to the length of m's expansion.
  std::vector<std::uint64_t> beta_digits;
};

/// Builds b digit by digit from the top: the leading digit takes alpha_r - 1,
/// each lower digit takes min(alpha_k, remaining budget of p - 1). Requires
/// p odd prime, m > p and s_p(m) >= p; otherwise throws PreconditionError
/// "witness preconditions unmet". The result is checked against Lucas.
[[nodiscard]] MarbleWitness marble_witness(std::uint64_t m, std::uint64_t p);

/// Exact binomial coefficient by the multiplicative formula. Used as an
/// oracle that shares no code with the digit routines above.
[[nodiscard]] BigInt exact_binomial(std::uint64_t m, std::uint64_t k);

/// Exponent of p in x (x > 0), by repeated division.
[[nodiscard]] std::uint64_t valuation(BigInt x, std::uint64_t p);

}  // namespace psd
