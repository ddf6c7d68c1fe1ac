#include "psd/formulas.hpp"

#include <algorithm>
#include <string>

#include "psd/errors.hpp"
#include "psd/padic.hpp"
#include "psd/powersum.hpp"

namespace psd {

namespace {

// Largest p allowed by the bound M_n, i.e. floor(M_n).
std::uint64_t floor_M(std::uint64_t n) { return n % 2 == 0 ? (n + 2) / 2 : (n + 2) / 3; }

bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

}  // namespace

SquarefreeProduct EpsilonVector::product() const {
  std::vector<std::uint64_t> primes;
  for (const auto& [p, e] : entries) {
    if (e == 1) primes.push_back(p);
  }
  return SquarefreeProduct(std::move(primes));
}

SquarefreeProduct q_n_formula(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (auto p : primes_upto(floor_M(n))) {
    if (within_bound_M(p, n) && digit_sum(n + 1, p) >= p) primes.push_back(p);
  }
  return SquarefreeProduct(std::move(primes));
}

EpsilonVector q_n_epsilon(std::uint64_t n) {
  EpsilonVector out{n, {}};
  const std::uint64_t m = n + 1;
  for (auto p : primes_upto(floor_M(n))) {
    if (!within_bound_M(p, n)) continue;
    if (p == 2) {
      out.entries[p] = is_power_of_two(m) ? 0 : 1;
      continue;
    }
    bool zero = (n + 2) % p != 0;
    const std::uint64_t top = n / (p - 1);
    for (std::uint64_t j = 2; zero && j + 1 <= top; ++j) {
      if (lucas_binom_mod(m, j * (p - 1), p) != 0) zero = false;
    }
    out.entries[p] = zero ? 0 : 1;
  }
  return out;
}

SquarefreeProduct pset(std::uint64_t m, std::uint64_t k) {
  if (k > m) throw PreconditionError("pset requires k <= m");
  if (k == 0) return {};
  if (k == 1) return m % 2 == 0 ? SquarefreeProduct{} : SquarefreeProduct({2});
  if (k % 2 == 1) return {};
  std::vector<std::uint64_t> primes;
  for (auto d : divisors(k)) {
    const std::uint64_t p = d + 1;
    if (is_prime(p) && lucas_binom_mod(m, k, p) != 0) primes.push_back(p);
  }
  return SquarefreeProduct(std::move(primes));
}

SquarefreeProduct q_n_via_psets(std::uint64_t n) {
  const std::uint64_t m = n + 1;
  std::vector<std::uint64_t> all;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const auto part = pset(m, k);
    all.insert(all.end(), part.primes().begin(), part.primes().end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return SquarefreeProduct(std::move(all));
}

bool hermite_bachmann_holds(std::uint64_t m, std::uint64_t p) {
  require_prime_base(p);
  if (m == 0) throw PreconditionError("hermite_bachmann_holds requires m >= 1");
  BigInt sum = 0;
  for (std::uint64_t j = 1; j * (p - 1) <= m - 1; ++j) sum += exact_binomial(m, j * (p - 1));
  return sum % BigInt(p) == 0;
}

std::pair<std::uint64_t, std::uint64_t> sharpness_witnesses(std::uint64_t p) {
  if (p % 2 == 0 || !is_prime(p)) throw PreconditionError("sharpness witnesses need an odd prime");
  const std::uint64_t n0 = 2 * p - 2;
  const std::uint64_t n1 = 3 * p - 2;
  for (auto n : {n0, n1}) {
    if (bound_M(n) != Rational(BigInt(p)) || !q_n_formula(n).contains(p)) {
      throw ArithmeticBug("bound M_n is not attained by p=" + std::to_string(p) +
                          " at n=" + std::to_string(n));
    }
  }
  return {n0, n1};
}

bool pset_bound_check(std::uint64_t m, std::uint64_t k) {
  const bool m_odd = m % 2 == 1;
  const std::uint64_t k_max = m_odd ? m - 1 : m - 2;
  if (m < 3 || k < 2 || k % 2 != 0 || k > k_max) {
    throw PreconditionError("pset_bound_check needs even k in [2, m-1] (m odd) or [2, m-2] (m even)");
  }
  const std::uint64_t top = pset(m, k).max_prime();
  const std::uint64_t divisor = m_odd ? 2 : 3;
  return top <= k + 1 && divisor * top <= m + 1;
}

}  // namespace psd
