#pragma once

// Closed-form routes to q_n = d_n / (n+1) that never build a polynomial:
//
//   q_n_formula     primes p <= M_n with s_p(n+1) >= p
//   q_n_epsilon     per-prime exponents from binomial divisibility
//   q_n_via_psets   union of the prime sets P_{n+1,k}, k = 1..n, i.e. the
//                   denominators of binom(n+1, k) B_k
//
// plus the congruence, bound and sharpness checks that tie them together.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "psd/primes.hpp"
#include "psd/squarefree.hpp"

namespace psd {

/// Exponents eps_p in {0, 1} for every prime p <= M_n.
struct EpsilonVector {
  std::uint64_t n = 0;
  std::map<std::uint64_t, int> entries;

  [[nodiscard]] SquarefreeProduct product() const;
};

[[nodiscard]] SquarefreeProduct q_n_formula(std::uint64_t n);

/// eps_2 = 0 iff n + 1 is a power of two. For odd p: eps_p = 0 iff p does not
/// divide n + 2 and p divides binom(n+1, j(p-1)) for j = 2 .. floor(n/(p-1)) - 1.
[[nodiscard]] EpsilonVector q_n_epsilon(std::uint64_t n);

/// Primes dividing denom(binom(m, k) B_k). Requires k <= m.
[[nodiscard]] SquarefreeProduct pset(std::uint64_t m, std::uint64_t k);

[[nodiscard]] SquarefreeProduct q_n_via_psets(std::uint64_t n);

/// Checks sum_{1 <= j <= (m-1)/(p-1)} binom(m, j(p-1)) == 0 (mod p) with exact
/// binomials.
[[nodiscard]] bool hermite_bachmann_holds(std::uint64_t m, std::uint64_t p);

/// (2p - 2, 3p - 2): an even and an odd index whose bound M equals p and whose
/// q is divisible by p. Throws ArithmeticBug if either claim fails.
[[nodiscard]] std::pair<std::uint64_t, std::uint64_t> sharpness_witnesses(std::uint64_t p);

/// max(pset(m, k)) <= min(k + 1, (m + 1)/2) for odd m, and
/// <= min(k + 1, (m + 1)/3) for even m, with max of the empty set = 0.
/// Valid input: even k with 2 <= k <= m - 1 (m odd) or 2 <= k <= m - 2 (m even), m >= 3.
[[nodiscard]] bool pset_bound_check(std::uint64_t m, std::uint64_t k);

}  // namespace psd
