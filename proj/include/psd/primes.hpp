#pragma once

#include <cstdint>
#include <vector>

namespace psd {

/// Trial division; the inputs seen here are small.
[[nodiscard]] bool is_prime(std::uint64_t x);

/// All primes <= x in increasing order (sieve of Eratosthenes).
[[nodiscard]] std::vector<std::uint64_t> primes_upto(std::uint64_t x);

/// Positive divisors of x in increasing order; x must be positive.
[[nodiscard]] std::vector<std::uint64_t> divisors(std::uint64_t x);

}  // namespace psd
