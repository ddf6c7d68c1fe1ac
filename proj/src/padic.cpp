#include "psd/padic.hpp"

#include <algorithm>
#include <string>

#include "psd/errors.hpp"
#include "psd/primes.hpp"

namespace psd {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1U) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

// binom(a, b) mod p for digits a, b < p; zero when a < b.
std::uint64_t small_binom_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  unsigned __int128 num = 1;
  unsigned __int128 den = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    num = num * ((a - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  // den is a product of integers < p, hence invertible
  return static_cast<std::uint64_t>(num * pow_mod(static_cast<std::uint64_t>(den), p - 2, p) % p);
}

}  // namespace

std::uint64_t DigitExpansion::value() const {
  std::uint64_t v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * p + *it;
  return v;
}

std::uint64_t DigitExpansion::digit_sum() const {
  std::uint64_t s = 0;
  for (auto d : digits) s += d;
  return s;
}

void require_prime_base(std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError("not a prime base: " + std::to_string(p));
}

DigitExpansion digits(std::uint64_t x, std::uint64_t p) {
  require_prime_base(p);
  DigitExpansion out{p, {}};
  for (; x > 0; x /= p) out.digits.push_back(x % p);
  return out;
}

std::uint64_t digit_sum(std::uint64_t x, std::uint64_t p) {
  require_prime_base(p);
  std::uint64_t s = 0;
  for (; x > 0; x /= p) s += x % p;
  return s;
}

std::uint64_t legendre_valuation_factorial(std::uint64_t x, std::uint64_t p) {
  return (x - digit_sum(x, p)) / (p - 1);
}

std::uint64_t binomial_valuation(std::uint64_t m, std::uint64_t k, std::uint64_t p) {
  if (k > m) throw PreconditionError("binomial_valuation requires k <= m");
  return (digit_sum(k, p) + digit_sum(m - k, p) - digit_sum(m, p)) / (p - 1);
}

std::uint64_t lucas_binom_mod(std::uint64_t m, std::uint64_t k, std::uint64_t p) {
  require_prime_base(p);
  if (k > m) return 0;
  std::uint64_t residue = 1 % p;
  while (k > 0 && residue != 0) {
    residue = residue * small_binom_mod(m % p, k % p, p) % p;
    m /= p;
    k /= p;
  }
  return residue;
}

std::uint64_t fine_count(std::uint64_t m, std::uint64_t p) {
  std::uint64_t count = 1;
  for (auto d : digits(m, p).digits) count *= d + 1;
  return count;
}

MarbleWitness marble_witness(std::uint64_t m, std::uint64_t p) {
  if (p % 2 == 0 || !is_prime(p) || m <= p || digit_sum(m, p) < p) {
    throw PreconditionError("witness preconditions unmet");
  }
  const auto alpha = digits(m, p).digits;
  const std::size_t r = alpha.size() - 1;

  std::vector<std::uint64_t> beta(r + 1, 0);
  beta[r] = alpha[r] - 1;
  std::uint64_t used = beta[r];
  for (std::size_t k = r; k-- > 0;) {
    beta[k] = std::min(alpha[k], (p - 1) - used);
    used += beta[k];
  }

  MarbleWitness w{m, p, 0, 0, beta};
  for (std::size_t k = r + 1; k-- > 0;) w.b = w.b * p + beta[k];
  if (used != p - 1 || w.b % (p - 1) != 0) {
    throw ArithmeticBug("marble witness did not place all p - 1 marbles");
  }
  w.j = w.b / (p - 1);
  const std::uint64_t bound = (m - 1) / (p - 1);
  if (w.j < 1 || w.j > bound || lucas_binom_mod(m, w.b, p) == 0) {
    throw ArithmeticBug("marble witness failed its Lucas check for m=" + std::to_string(m) +
                        ", p=" + std::to_string(p));
  }
  return w;
}

BigInt exact_binomial(std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= BigInt(m - k + i);
    result /= BigInt(i);  // exact: result is binom(m - k + i, i)
  }
  return result;
}

std::uint64_t valuation(BigInt x, std::uint64_t p) {
  if (x == 0) throw PreconditionError("valuation of zero");
  std::uint64_t v = 0;
  const BigInt bp(p);
  while (x % bp == 0) {
    x /= bp;
    ++v;
  }
  return v;
}

}  // namespace psd
