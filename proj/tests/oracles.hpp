#pragma once

// Test-only reference computations. None of these call into the library's
// digit, Bernoulli or polynomial code paths.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace oracle {

inline mpz_class binomial(std::uint64_t m, std::uint64_t k) {
  mpz_class out;
  if (k > m) return 0;
  mpz_bin_uiui(out.get_mpz_t(), m, k);
  return out;
}

inline mpz_class factorial(std::uint64_t x) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), x);
  return out;
}

/// Exponent of p in x > 0 by repeated division.
inline std::uint64_t exponent(mpz_class x, std::uint64_t p) {
  std::uint64_t e = 0;
  while (mpz_divisible_ui_p(x.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
    ++e;
  }
  return e;
}

/// Count of k in [0, m] with binom(m, k) mod p != 0, by scanning the row.
inline std::uint64_t nonzero_in_row(std::uint64_t m, std::uint64_t p) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 0; k <= m; ++k) {
    if (mpz_divisible_ui_p(binomial(m, k).get_mpz_t(), p) == 0) ++count;
  }
  return count;
}

/// 1^n + 2^n + ... + x^n with integers.
inline mpz_class power_sum(std::uint64_t n, std::uint64_t x) {
  mpz_class sum = 0;
  for (std::uint64_t i = 1; i <= x; ++i) {
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), i, n);
    sum += t;
  }
  return sum;
}

/// B_0..B_max via the Akiyama-Tanigawa transform, sign of B_1 flipped to -1/2.
inline std::vector<mpq_class> bernoulli(std::uint64_t max_n) {
  std::vector<mpq_class> out;
  std::vector<mpq_class> a(max_n + 1);
  for (std::uint64_t m = 0; m <= max_n; ++m) {
    a[m] = mpq_class(1, m + 1);
    for (std::uint64_t j = m; j >= 1; --j) {
      a[j - 1] = mpq_class(j) * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
    out.push_back(a[0]);
  }
  if (max_n >= 1) out[1] = -out[1];
  return out;
}

inline bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

/// Distinct prime factors of x > 0 together with a squarefree flag.
struct Factors {
  std::vector<std::uint64_t> primes;
  bool squarefree = true;
};

inline Factors factor(mpz_class x) {
  Factors f;
  for (std::uint64_t p = 2; x > 1; ++p) {
    if (!is_prime(p)) continue;
    const std::uint64_t e = exponent(x, p);
    if (e == 0) continue;
    f.primes.push_back(p);
    if (e > 1) f.squarefree = false;
    for (std::uint64_t i = 0; i < e; ++i) mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
  }
  return f;
}

inline mpz_class product(const std::vector<std::uint64_t>& primes) {
  mpz_class v = 1;
  for (auto p : primes) v *= p;
  return v;
}

}  // namespace oracle
