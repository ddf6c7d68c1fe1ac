#pragma once

#include <cstdint>
#include <vector>

#include "psd/exact_poly.hpp"
#include "psd/squarefree.hpp"

namespace psd {

/// Immutable table of Bernoulli numbers B_0..B_max, with B_1 = -1/2.
class BernoulliTable {
 public:
  /// Computes B_0..B_max from sum_{k=0}^{n} binom(n+1, k) B_k = 0 (n >= 1).
  static BernoulliTable compute(std::uint64_t max_n);

  /// A table covering at least max_n, reusing the entries already present.
  [[nodiscard]] BernoulliTable extended(std::uint64_t max_n) const;

  [[nodiscard]] std::uint64_t max_n() const { return values_.size() - 1; }
  /// B_n; throws std::out_of_range past max_n().
  [[nodiscard]] const Rational& operator[](std::uint64_t n) const;
  [[nodiscard]] const std::vector<Rational>& values() const { return values_; }

 private:
  explicit BernoulliTable(std::vector<Rational> values) : values_(std::move(values)) {}

  std::vector<Rational> values_;
};

[[nodiscard]] inline BernoulliTable bernoulli_numbers(std::uint64_t max_n) {
  return BernoulliTable::compute(max_n);
}

/// B_n(x) = sum_k binom(n, k) B_k x^(n-k). Needs table.max_n() >= n.
[[nodiscard]] RationalPolynomial bernoulli_poly(std::uint64_t n, const BernoulliTable& table);

/// Von Staudt-Clausen: denom(B_n) is the product of primes p with (p-1) | n.
/// Defined for even n >= 2 only.
[[nodiscard]] SquarefreeProduct clausen_denominator(std::uint64_t n);

/// denom(B_n(x)) read off the polynomial itself. n >= 1.
[[nodiscard]] BigInt bernoulli_poly_denominator_direct(std::uint64_t n, const BernoulliTable& table);

/// denom(B_n(x)) from digit sums alone, without any Bernoulli numbers:
///   n = 1:           {2}
///   n >= 3 odd:      primes p with 2p <= n+1 and s_p(n) >= p
///   n >= 2 even:     clausen_denominator(n) together with primes p such
///                    that (p-1) does not divide n, 3p <= n+1 and s_p(n) >= p
[[nodiscard]] SquarefreeProduct bernoulli_poly_denominator_formula(std::uint64_t n);

/// Whether k^n (B_n(h/k) - B_n) is an integer. Always true unless the
/// arithmetic is broken.
[[nodiscard]] bool almkvist_meurman_check(std::uint64_t n, std::int64_t h, std::uint64_t k,
                                          const BernoulliTable& table);

}  // namespace psd
