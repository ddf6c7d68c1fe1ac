#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "psd/exact_poly.hpp"

namespace psd {

/// A product of distinct primes, kept as its sorted factor list plus value.
/// The empty product is 1.
class SquarefreeProduct {
 public:
  SquarefreeProduct() = default;
  /// Primes must be strictly increasing; primality is checked.
  explicit SquarefreeProduct(std::vector<std::uint64_t> primes);

  [[nodiscard]] const std::vector<std::uint64_t>& primes() const { return primes_; }
  [[nodiscard]] const BigInt& value() const { return value_; }
  [[nodiscard]] bool contains(std::uint64_t p) const;
  /// Largest prime factor, 0 for the empty product.
  [[nodiscard]] std::uint64_t max_prime() const { return primes_.empty() ? 0 : primes_.back(); }

  friend bool operator==(const SquarefreeProduct& a, const SquarefreeProduct& b) {
    return a.primes_ == b.primes_;
  }
  friend std::ostream& operator<<(std::ostream& os, const SquarefreeProduct& s);

 private:
  std::vector<std::uint64_t> primes_;
  BigInt value_ = 1;
};

/// Trial division of x > 0 by the primes <= bound. `primes` lists the distinct
/// primes found; `fully_factored` is false if a cofactor > 1 remains.
struct BoundedFactorization {
  bool squarefree = false;
  bool fully_factored = false;
  std::vector<std::uint64_t> primes;
};
[[nodiscard]] BoundedFactorization factor_over_primes(const BigInt& x, std::uint64_t bound);

}  // namespace psd
