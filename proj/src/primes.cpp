#include "psd/primes.hpp"

#include <algorithm>

#include "psd/errors.hpp"

namespace psd {

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  if (x % 2 == 0) return x == 2;
  for (std::uint64_t d = 3; d <= x / d; d += 2) {
    if (x % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t x) {
  std::vector<std::uint64_t> primes;
  if (x < 2) return primes;
  std::vector<bool> composite(x + 1, false);
  for (std::uint64_t i = 2; i <= x; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= x; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::uint64_t> divisors(std::uint64_t x) {
  if (x == 0) throw PreconditionError("divisors of zero");
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t d = 1; d <= x / d; ++d) {
    if (x % d != 0) continue;
    small.push_back(d);
    if (d != x / d) large.push_back(x / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace psd
