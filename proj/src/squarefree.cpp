#include "psd/squarefree.hpp"

#include <algorithm>
#include <string>

#include "psd/errors.hpp"
#include "psd/primes.hpp"

namespace psd {

SquarefreeProduct::SquarefreeProduct(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (!is_prime(primes_[i])) {
      throw PreconditionError("squarefree product factor is not prime: " + std::to_string(primes_[i]));
    }
    if (i > 0 && primes_[i - 1] >= primes_[i]) {
      throw PreconditionError("squarefree product factors must be strictly increasing");
    }
    value_ *= BigInt(primes_[i]);
  }
}

bool SquarefreeProduct::contains(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::ostream& operator<<(std::ostream& os, const SquarefreeProduct& s) {
  if (s.primes_.empty()) return os << "1";
  for (std::size_t i = 0; i < s.primes_.size(); ++i) {
    if (i > 0) os << " * ";
    os << s.primes_[i];
  }
  return os << " = " << s.value_;
}

BoundedFactorization factor_over_primes(const BigInt& x, std::uint64_t bound) {
  if (x <= 0) throw PreconditionError("factor_over_primes needs a positive integer");
  BoundedFactorization out;
  out.squarefree = true;
  BigInt rest = x;
  for (auto p : primes_upto(bound)) {
    if (rest == 1) break;
    const BigInt bp(p);
    if (rest % bp != 0) continue;
    rest /= bp;
    out.primes.push_back(p);
    if (rest % bp == 0) out.squarefree = false;
    while (rest % bp == 0) rest /= bp;
  }
  out.fully_factored = (rest == 1);
  return out;
}

}  // namespace psd
