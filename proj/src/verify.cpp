#include "psd/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>

#include "psd/bernoulli.hpp"
#include "psd/errors.hpp"
#include "psd/formulas.hpp"
#include "psd/padic.hpp"
#include "psd/parallel.hpp"
#include "psd/powersum.hpp"

namespace psd {

namespace {

constexpr std::uint64_t kOracleLimit = 100;
constexpr std::uint64_t kHermitePrimeLimit = 50;
constexpr std::int64_t kAlmkvistH = 20;
constexpr std::uint64_t kAlmkvistK = 20;
constexpr std::size_t kMaxListedFailures = 10;

using Failures = std::vector<std::string>;

class Collector {
 public:
  explicit Collector(std::uint64_t index) : index_(index) {}

  void expect(bool condition, const std::string& what) {
    if (!condition) failures_.push_back("n=" + std::to_string(index_) + ": " + what);
  }
  Failures take() { return std::move(failures_); }

 private:
  std::uint64_t index_;
  Failures failures_;
};

// Runs check(i) over [first, last]; an index passes when it reports nothing.
SuiteReport run_indexed(const std::string& name, std::uint64_t first, std::uint64_t last,
                        unsigned workers, const std::function<void(std::uint64_t, Collector&)>& check) {
  SuiteReport report{name, 0, 0, {}};
  const auto per_index = parallel_map(first, last, workers, [&](std::uint64_t i) {
    Collector c(i);
    try {
      check(i, c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    return c.take();
  });
  for (const auto& failures : per_index) {
    if (failures.empty()) {
      ++report.passed;
      continue;
    }
    ++report.failed;
    for (const auto& f : failures) {
      if (report.failures.size() < kMaxListedFailures) report.failures.push_back(f);
    }
  }
  return report;
}

bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

SuiteReport agreement(std::uint64_t max_n, unsigned workers, const BernoulliTable& table) {
  auto report = run_indexed("agreement", 0, max_n, workers, [&](std::uint64_t n, Collector& c) {
    const auto formula = q_n_formula(n);
    const auto eps = q_n_epsilon(n);
    const auto psets = q_n_via_psets(n);
    const BigInt brute = q_n_bruteforce(n, table);
    c.expect(eps.product() == formula, "epsilon route disagrees with digit-sum formula");
    c.expect(psets == formula, "prime-set route disagrees with digit-sum formula");
    c.expect(brute == formula.value(), "polynomial denominator disagrees with digit-sum formula");
    for (const auto& [p, e] : eps.entries) {
      c.expect((e == 1) == (digit_sum(n + 1, p) >= p),
               "eps_" + std::to_string(p) + " does not match s_p(n+1) >= p");
    }
    const auto shifted = shifted_power_sum_poly(n, table);
    if (n <= kOracleLimit) {
      c.expect(power_sum_oracle(n) == shifted, "interpolated power sum differs");
    }
    if (n >= 1) {
      const auto unshifted = power_sum_poly(n, table);
      c.expect(shifted - unshifted == RationalPolynomial::monomial(Rational(1), n),
               "S_n(x+1) - S_n(x) is not x^n");
      c.expect(t_n_poly(n, table) * RationalPolynomial::identity() ==
                   unshifted * Rational(BigInt(n + 1)),
               "T_n(x) x differs from (n+1) S_n(x)");
      const auto form = faulhaber_form(n, table);
      c.expect(form.p_poly.eval(1) == form.d, "p_n(1) differs from d_n");
      c.expect(form.p_poly.content() == 1, "p_n coefficients are not coprime");
    }
  });

  // Growth of max q_n over nested ranges.
  std::vector<std::uint64_t> checkpoints;
  for (std::uint64_t cp : {20U, 100U, 300U}) {
    if (cp <= max_n) checkpoints.push_back(cp);
  }
  if (checkpoints.size() >= 2) {
    std::vector<BigInt> maxima;
    BigInt best = 0;
    std::uint64_t n = 0;
    for (auto cp : checkpoints) {
      for (; n <= cp; ++n) best = std::max(best, q_n_formula(n).value());
      maxima.push_back(best);
    }
    bool increasing = true;
    for (std::size_t i = 1; i < maxima.size(); ++i) increasing = increasing && maxima[i - 1] < maxima[i];
    if (increasing) {
      ++report.passed;
    } else {
      ++report.failed;
      report.failures.emplace_back("max q_n does not grow across checkpoints");
    }
  }
  return report;
}

SuiteReport clausen(std::uint64_t max_n, unsigned workers, const BernoulliTable& table) {
  return run_indexed("clausen", 1, max_n, workers, [&](std::uint64_t n, Collector& c) {
    const Rational& bn = table[n];
    if (n % 2 == 0) {
      c.expect(denom(bn) == clausen_denominator(n).value(), "denom(B_n) differs from von Staudt-Clausen");
    } else if (n > 1) {
      c.expect(bn.is_zero(), "B_n is nonzero for odd n > 1");
    }
    const auto poly = bernoulli_poly(n, table);
    c.expect(poly.degree() == n && poly.leading() == Rational(1), "B_n(x) is not monic of degree n");
    c.expect(poly.coeff(0) == bn, "constant term of B_n(x) is not B_n");

    const BigInt direct = bernoulli_poly_denominator_direct(n, table);
    const auto formula = bernoulli_poly_denominator_formula(n);
    c.expect(direct == formula.value(), "denom(B_n(x)) differs from the digit-sum formula");
    c.expect(direct % denom(bn) == 0, "denom(B_n) does not divide denom(B_n(x))");
    const auto factors = factor_over_primes(direct, n + 1);
    c.expect(direct % 2 == 0 && factors.squarefree && factors.fully_factored,
             "denom(B_n(x)) is not even and squarefree");
  });
}

SuiteReport hermite(std::uint64_t max_n, unsigned workers) {
  const auto primes = primes_upto(kHermitePrimeLimit);
  return run_indexed("hermite", 1, max_n, workers, [&](std::uint64_t m, Collector& c) {
    for (auto p : primes) {
      c.expect(hermite_bachmann_holds(m, p), "congruence fails for p=" + std::to_string(p));
    }
  });
}

SuiteReport bounds(std::uint64_t max_n, unsigned workers, const BernoulliTable& table) {
  return run_indexed("bounds", 0, max_n, workers, [&](std::uint64_t n, Collector& c) {
    const BigInt d = d_n(n, table);
    const auto d_factors = factor_over_primes(d, n + 1);
    c.expect(d_factors.fully_factored, "d_n has a prime factor above n+1");
    c.expect(d % BigInt(n + 1) == 0, "n+1 does not divide d_n");
    const BigInt q = d / BigInt(n + 1);
    const auto q_factors = factor_over_primes(q, n + 1);
    c.expect(q_factors.squarefree && q_factors.fully_factored, "q_n is not squarefree");
    if (n >= 1) c.expect(d % 2 == 0, "d_n is odd");
    c.expect((q % 2 != 0) == is_power_of_two(n + 1), "q_n odd does not match n+1 = 2^r");
    for (auto p : q_factors.primes) {
      c.expect(within_bound_M(p, n), "prime " + std::to_string(p) + " of q_n exceeds M_n");
    }

    // Prime-set bounds, indexed by m = n.
    const std::uint64_t m = n;
    if (m >= 3) {
      const std::uint64_t k_max = m % 2 == 1 ? m - 1 : m - 2;
      for (std::uint64_t k = 2; k <= k_max; k += 2) {
        c.expect(pset_bound_check(m, k), "prime-set bound fails for m=" + std::to_string(m) +
                                             ", k=" + std::to_string(k));
      }
    }
    // binom(m, k) even for all even 0 < k < m  <=>  m is a power of two.
    if (m >= 4 && m % 2 == 0) {
      bool all_even = true;
      for (std::uint64_t k = 2; k <= m - 2; k += 2) all_even = all_even && exact_binomial(m, k) % 2 == 0;
      c.expect(all_even == is_power_of_two(m), "even-binomial criterion fails");
    }
  });
}

SuiteReport witnesses(std::uint64_t max_n, unsigned workers) {
  auto report = run_indexed("witnesses", 0, max_n, workers, [&](std::uint64_t n, Collector& c) {
    const auto q = q_n_formula(n);
    for (auto p : q.primes()) {
      if (p == 2) continue;
      const auto w = marble_witness(n + 1, p);
      c.expect(w.b == w.j * (p - 1) && lucas_binom_mod(n + 1, w.b, p) != 0,
               "witness for p=" + std::to_string(p) + " is unsound");
    }
  });
  for (auto p : primes_upto(max_n)) {
    if (p == 2) continue;
    try {
      const auto [n0, n1] = sharpness_witnesses(p);
      if (n0 == 2 * p - 2 && n1 == 3 * p - 2) {
        ++report.passed;
        continue;
      }
    } catch (const std::exception& e) {
      report.failures.push_back(std::string("sharpness: ") + e.what());
    }
    ++report.failed;
  }
  return report;
}

SuiteReport almkvist(std::uint64_t max_n, unsigned workers, const BernoulliTable& table) {
  return run_indexed("almkvist", 1, max_n, workers, [&](std::uint64_t n, Collector& c) {
    for (std::int64_t h = -kAlmkvistH; h <= kAlmkvistH; ++h) {
      for (std::uint64_t k = 1; k <= kAlmkvistK; ++k) {
        c.expect(almkvist_meurman_check(n, h, k, table),
                 "not integral at h=" + std::to_string(h) + ", k=" + std::to_string(k));
      }
    }
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"agreement", "clausen",   "hermite",
                                              "bounds",    "witnesses", "almkvist"};
  return names;
}

bool is_known_suite(std::string_view name) {
  if (name == "all") return true;
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<SuiteReport> run_suites(std::string_view name, std::uint64_t max_n, unsigned workers) {
  if (!is_known_suite(name)) throw PreconditionError("unknown suite: " + std::string(name));
  const bool all = name == "all";
  const auto wants = [&](std::string_view s) { return all || name == s; };

  const bool needs_table = wants("agreement") || wants("clausen") || wants("bounds") || wants("almkvist");
  const BernoulliTable table = BernoulliTable::compute(needs_table ? max_n + 2 : 1);

  std::vector<SuiteReport> reports;
  if (wants("agreement")) reports.push_back(agreement(max_n, workers, table));
  if (wants("clausen")) reports.push_back(clausen(max_n, workers, table));
  if (wants("hermite")) reports.push_back(hermite(max_n, workers));
  if (wants("bounds")) reports.push_back(bounds(max_n, workers, table));
  if (wants("witnesses")) reports.push_back(witnesses(max_n, workers));
  if (wants("almkvist")) reports.push_back(almkvist(max_n, workers, table));
  return reports;
}

}  // namespace psd
