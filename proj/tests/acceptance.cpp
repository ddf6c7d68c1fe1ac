// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every check is exact; the only tolerances are the wall-clock limits.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "psd/bernoulli.hpp"
#include "psd/formulas.hpp"
#include "psd/padic.hpp"
#include "psd/powersum.hpp"

using namespace psd;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<std::string()> check;  // empty string on success, else a reason
};

const BernoulliTable& table() {
  static const BernoulliTable t = BernoulliTable::compute(401);
  return t;
}

std::string expect_sequence(const std::string& label, const std::vector<long>& expected, std::uint64_t first,
                            const std::function<BigInt(std::uint64_t)>& fn) {
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const std::uint64_t n = first + i;
    const BigInt got = fn(n);
    if (got != expected[i]) {
      return label + " mismatch at n=" + std::to_string(n) + ": got " + got.get_str() + ", want " +
             std::to_string(expected[i]);
    }
  }
  return {};
}

bool power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

std::string fixtures() {
  const std::vector<long> d{1, 2, 6, 4, 30, 12, 42, 24, 90, 20, 66, 24, 2730, 420, 90, 48, 510};
  const std::vector<long> q{1, 1, 2, 1, 6, 2, 6, 3, 10, 2, 6, 2, 210, 30, 6, 3, 30, 10, 210, 42, 330};
  const std::vector<long> D{2, 6, 2, 30, 6, 42, 6, 30, 10, 66, 6, 2730, 210, 30, 6, 510, 30, 3990, 210};
  const auto small = BernoulliTable::compute(21);
  std::string r;
  if (!(r = expect_sequence("d_n (polynomial)", d, 0, [&](auto n) { return d_n(n, small); })).empty()) return r;
  if (!(r = expect_sequence("d_n (formula)", d, 0,
                            [](auto n) { return BigInt(q_n_formula(n).value() * BigInt(n + 1)); }))
           .empty())
    return r;
  if (!(r = expect_sequence("q_n (formula)", q, 0, [](auto n) { return q_n_formula(n).value(); })).empty()) return r;
  if (!(r = expect_sequence("q_n (polynomial)", q, 0, [&](auto n) { return q_n_bruteforce(n, small); })).empty())
    return r;
  if (!(r = expect_sequence("D_n (formula)", D, 1,
                            [](auto n) { return bernoulli_poly_denominator_formula(n).value(); }))
           .empty())
    return r;
  return expect_sequence("D_n (polynomial)", D, 1,
                         [&](auto n) { return bernoulli_poly_denominator_direct(n, small); });
}

std::string example_table() {
  const auto small = BernoulliTable::compute(21);
  struct Row {
    std::uint64_t n;
    long m_bound, q, d;
  };
  for (const Row& row : {Row{19, 7, 42, 840}, Row{20, 11, 330, 6930}}) {
    if (bound_M(row.n) != Rational(row.m_bound)) return "M_" + std::to_string(row.n) + " wrong";
    if (q_n_formula(row.n).value() != row.q || q_n_bruteforce(row.n, small) != row.q) {
      return "q_" + std::to_string(row.n) + " wrong";
    }
    if (d_n(row.n, small) != row.d) return "d_" + std::to_string(row.n) + " wrong";
  }
  const std::vector<std::uint64_t> p20{2, 3, 5, 7}, s20{2, 4, 4, 8};
  const std::vector<std::uint64_t> p21{2, 3, 5, 7, 11}, s21{3, 3, 5, 3, 11};
  for (std::size_t i = 0; i < p20.size(); ++i) {
    if (digit_sum(20, p20[i]) != s20[i]) return "s_p(20) wrong for p=" + std::to_string(p20[i]);
  }
  for (std::size_t i = 0; i < p21.size(); ++i) {
    if (digit_sum(21, p21[i]) != s21[i]) return "s_p(21) wrong for p=" + std::to_string(p21[i]);
  }
  return {};
}

std::string triple_agreement() {
  for (std::uint64_t n = 0; n <= 300; ++n) {
    const auto f = q_n_formula(n);
    if (!(q_n_epsilon(n).product() == f)) return "epsilon route differs at n=" + std::to_string(n);
    if (!(q_n_via_psets(n) == f)) return "prime-set route differs at n=" + std::to_string(n);
    const BigInt shifted = poly_denominator(shifted_power_sum_poly(n, table()));
    if (shifted != f.value() * BigInt(n + 1)) return "d_n of S_n(x+1) differs at n=" + std::to_string(n);
    if (n >= 1 && poly_denominator(power_sum_poly(n, table())) != shifted) {
      return "d_n of S_n(x) differs at n=" + std::to_string(n);
    }
    if (q_n_bruteforce(n, table()) != f.value()) return "brute-force q_n differs at n=" + std::to_string(n);
  }
  return {};
}

std::string oracle_equivalence() {
  for (std::uint64_t n = 0; n <= 100; ++n) {
    if (!(power_sum_oracle(n) == shifted_power_sum_poly(n, table()))) {
      return "interpolated power sum differs at n=" + std::to_string(n);
    }
  }
  return {};
}

std::string von_staudt_clausen() {
  for (std::uint64_t n = 2; n <= 400; n += 2) {
    if (denom(table()[n]) != clausen_denominator(n).value()) return "mismatch at n=" + std::to_string(n);
  }
  return {};
}

std::string padic_oracles() {
  for (auto p : primes_upto(50)) {
    for (std::uint64_t x = 0; x <= 200; ++x) {
      if (legendre_valuation_factorial(x, p) != oracle::exponent(oracle::factorial(x), p)) {
        return "Legendre mismatch x=" + std::to_string(x) + " p=" + std::to_string(p);
      }
    }
  }
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    for (std::uint64_t m = 0; m <= 120; ++m) {
      for (std::uint64_t k = 0; k <= m; ++k) {
        if (mpz_class(lucas_binom_mod(m, k, p)) != mpz_class(oracle::binomial(m, k) % p)) {
          return "Lucas mismatch " + std::to_string(m) + " choose " + std::to_string(k);
        }
      }
    }
  }
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::uint64_t m = 0; m <= 120; ++m) {
      if (fine_count(m, p) != oracle::nonzero_in_row(m, p)) return "Fine count mismatch m=" + std::to_string(m);
    }
  }
  return {};
}

std::string congruences_and_bounds() {
  for (auto p : primes_upto(50)) {
    for (std::uint64_t m = 1; m <= 200; ++m) {
      if (!hermite_bachmann_holds(m, p)) return "Hermite-Bachmann fails m=" + std::to_string(m);
    }
  }
  for (std::uint64_t m = 3; m <= 150; ++m) {
    const std::uint64_t k_max = m % 2 == 1 ? m - 1 : m - 2;
    for (std::uint64_t k = 2; k <= k_max; k += 2) {
      if (!pset_bound_check(m, k)) return "prime-set bound fails m=" + std::to_string(m) + " k=" + std::to_string(k);
    }
  }
  for (std::uint64_t n = 0; n <= 300; ++n) {
    const BigInt d = d_n(n, table());
    const auto fd = oracle::factor(d);
    for (auto p : fd.primes) {
      if (p > n + 1) return "(i) fails at n=" + std::to_string(n);
    }
    if (d % BigInt(n + 1) != 0) return "(ii) divisibility fails at n=" + std::to_string(n);
    const BigInt q = d / BigInt(n + 1);
    const auto fq = oracle::factor(q);
    if (!fq.squarefree) return "(ii) squarefree fails at n=" + std::to_string(n);
    if (n >= 1 && d % 2 != 0) return "(iii) d_n odd at n=" + std::to_string(n);
    if ((q % 2 != 0) != power_of_two(n + 1)) return "(iii) parity criterion fails at n=" + std::to_string(n);
    for (auto p : fq.primes) {
      const bool ok = n % 2 == 0 ? 2 * p <= n + 2 : 3 * p <= n + 2;
      if (!ok) return "(iv) fails at n=" + std::to_string(n);
    }
  }
  return {};
}

std::string witnesses() {
  for (std::uint64_t n = 0; n <= 300; ++n) {
    const auto q = q_n_formula(n);
    for (auto p : q.primes()) {
      if (p == 2) continue;
      const auto w = marble_witness(n + 1, p);
      if (w.b != w.j * (p - 1) || mpz_class(oracle::binomial(n + 1, w.b) % p) == 0) {
        return "witness unsound n=" + std::to_string(n) + " p=" + std::to_string(p);
      }
    }
  }
  for (auto p : primes_upto(100)) {
    if (p == 2) continue;
    const auto [n0, n1] = sharpness_witnesses(p);
    if (n0 != 2 * p - 2 || n1 != 3 * p - 2) return "sharpness pair wrong for p=" + std::to_string(p);
  }
  return {};
}

std::string almkvist_meurman() {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    for (std::int64_t h = -20; h <= 20; ++h) {
      for (std::uint64_t k = 1; k <= 20; ++k) {
        if (!almkvist_meurman_check(n, h, k, table())) {
          return "not integral n=" + std::to_string(n) + " h=" + std::to_string(h) + " k=" + std::to_string(k);
        }
      }
    }
  }
  return {};
}

std::string million() {
  const auto q = q_n_formula(1'000'000);
  // n even, so every factor must satisfy 2p <= n + 2.
  if (q.primes().empty() || q.max_prime() > 500'001) return "implausible q_1000000";
  return {};
}

std::string growth() {
  std::vector<BigInt> maxima;
  BigInt best = 0;
  std::uint64_t n = 0;
  for (std::uint64_t cp : {20, 100, 300}) {
    for (; n <= cp; ++n) best = std::max(best, q_n_formula(n).value());
    maxima.push_back(best);
  }
  if (!(maxima[0] < maxima[1] && maxima[1] < maxima[2])) return "max q_n does not strictly increase";
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "sequence fixtures d_n, q_n, D_n", 1.0, fixtures},
      {2, "example table n=19, n=20 and digit sums", 1.0, example_table},
      {3, "four routes to q_n agree for n <= 300", 120.0, triple_agreement},
      {4, "interpolated power sums equal Bernoulli polynomials, n <= 100", 60.0, oracle_equivalence},
      {5, "von Staudt-Clausen for even n <= 400", 60.0, von_staudt_clausen},
      {6, "Legendre, Lucas and Fine against direct computation", 30.0, padic_oracles},
      {7, "Hermite-Bachmann, prime-set bounds, d_n structure", 60.0, congruences_and_bounds},
      {8, "digit-filling witnesses and sharpness pairs", 30.0, witnesses},
      {9, "Almkvist-Meurman integrality", 60.0, almkvist_meurman},
      {10, "q_n by digit sums at n = 10^6", 5.0, million},
      {11, "max q_n grows over N = 20, 100, 300", 60.0, growth},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    // Shared table setup is not charged to any one criterion.
    (void)table();
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      reason = c.check();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty() && seconds > c.limit_seconds) reason = "exceeded time limit";
    const bool ok = reason.empty();
    if (!ok) ++failures;
    std::printf("[%s] criterion %2d: %s (%.3f s, limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), seconds, c.limit_seconds, ok ? "" : " -- ", reason.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
