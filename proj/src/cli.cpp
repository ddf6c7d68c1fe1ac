#include "psd/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "psd/bernoulli.hpp"
#include "psd/errors.hpp"
#include "psd/formulas.hpp"
#include "psd/padic.hpp"
#include "psd/parallel.hpp"
#include "psd/powersum.hpp"
#include "psd/verify.hpp"

namespace psd::cli {

namespace {

constexpr int kBenchRuns = 3;

const std::map<std::string, Method> kMethodNames{
    {"formula", Method::formula}, {"epsilon", Method::epsilon}, {"psets", Method::psets}, {"brute", Method::brute}};
const std::map<std::string, Sequence> kSequenceNames{
    {"d", Sequence::d}, {"q", Sequence::q}, {"Dclausen", Sequence::Dclausen}, {"Dpoly", Sequence::Dpoly}};
const std::map<std::string, Format> kFormatNames{
    {"plain", Format::plain}, {"csv", Format::csv}, {"bfile", Format::bfile}};

template <typename Enum>
std::string name_of(const std::map<std::string, Enum>& names, Enum value) {
  for (const auto& [k, v] : names) {
    if (v == value) return k;
  }
  return "?";
}

// q_n by one of the Bernoulli-free routes.
BigInt q_by_closed_form(std::uint64_t n, Method method) {
  switch (method) {
    case Method::formula:
      return q_n_formula(n).value();
    case Method::epsilon:
      return q_n_epsilon(n).product().value();
    case Method::psets:
      return q_n_via_psets(n).value();
    case Method::brute:
      break;
  }
  throw std::logic_error("brute force needs a Bernoulli table");
}

std::vector<BigInt> compute_q_values(std::uint64_t first, std::uint64_t last, Method method,
                                     unsigned workers) {
  if (method == Method::brute) {
    const auto table = BernoulliTable::compute(last + 1);
    return parallel_map(first, last, workers, [&](std::uint64_t n) { return q_n_bruteforce(n, table); });
  }
  return parallel_map(first, last, workers, [&](std::uint64_t n) { return q_by_closed_form(n, method); });
}

}  // namespace

std::string to_string(Method m) { return name_of(kMethodNames, m); }
std::string to_string(Sequence s) { return name_of(kSequenceNames, s); }

std::vector<SequenceRecord> cmd_seq(const RunConfig& config) {
  if (config.from > config.to) throw UsageError("--from must not exceed --to");
  const auto method = config.method;
  std::vector<SequenceRecord> out;

  switch (config.sequence) {
    case Sequence::q:
    case Sequence::d: {
      std::optional<BernoulliTable> table;
      if (method == Method::brute) table = BernoulliTable::compute(config.to + 1);
      for (std::uint64_t n = config.from; n <= config.to; ++n) {
        BigInt value;
        if (config.sequence == Sequence::d && method == Method::brute) {
          value = d_n(n, *table);
        } else {
          value = method == Method::brute ? q_n_bruteforce(n, *table) : q_by_closed_form(n, method);
          if (config.sequence == Sequence::d) value *= BigInt(n + 1);
        }
        out.push_back({n, value});
      }
      break;
    }
    case Sequence::Dclausen: {
      if (method != Method::formula && method != Method::brute) {
        throw UsageError("Dclausen supports --method formula or brute");
      }
      if (config.from < 2) throw UsageError("Dclausen is defined for even n >= 2; use --from 2 or more");
      std::optional<BernoulliTable> table;
      if (method == Method::brute) table = BernoulliTable::compute(config.to);
      for (std::uint64_t n = config.from + config.from % 2; n <= config.to; n += 2) {
        out.push_back({n, method == Method::brute ? denom((*table)[n]) : clausen_denominator(n).value()});
      }
      break;
    }
    case Sequence::Dpoly: {
      if (method != Method::formula && method != Method::brute) {
        throw UsageError("Dpoly supports --method formula or brute");
      }
      if (config.from < 1) throw UsageError("Dpoly is defined for n >= 1; use --from 1 or more");
      std::optional<BernoulliTable> table;
      if (method == Method::brute) table = BernoulliTable::compute(config.to);
      for (std::uint64_t n = config.from; n <= config.to; ++n) {
        out.push_back({n, method == Method::brute ? bernoulli_poly_denominator_direct(n, *table)
                                                  : bernoulli_poly_denominator_formula(n).value()});
      }
      break;
    }
  }
  return out;
}

void write_records(std::ostream& os, const std::vector<SequenceRecord>& records, Format format,
                   Method method) {
  if (format == Format::csv) os << "n,value,method\n";
  for (const auto& r : records) {
    switch (format) {
      case Format::plain:
        os << r.value << '\n';
        break;
      case Format::csv:
        os << r.n << ',' << r.value << ',' << to_string(method) << '\n';
        break;
      case Format::bfile:
        os << r.n << ' ' << r.value << '\n';
        break;
    }
  }
}

std::vector<SequenceRecord> parse_bfile(std::istream& is) {
  std::vector<SequenceRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::uint64_t n = 0;
    std::string value;
    std::string extra;
    if (!(fields >> n >> value) || (fields >> extra)) {
      throw PreconditionError("malformed b-file line " + std::to_string(line_no));
    }
    BigInt v;
    if (v.set_str(value, 10) != 0) throw PreconditionError("malformed b-file value on line " + std::to_string(line_no));
    if (!out.empty() && n <= out.back().n) {
      throw PreconditionError("b-file indices must increase (line " + std::to_string(line_no) + ")");
    }
    out.push_back({n, v});
  }
  return out;
}

std::string cmd_poly(std::uint64_t n, bool shifted) {
  if (n == 0 && !shifted) throw UsageError("S_0(x) is only available in shifted form (--shifted)");
  const auto table = BernoulliTable::compute(n + 1);
  const auto poly = shifted ? shifted_power_sum_poly(n, table) : power_sum_poly(n, table);
  const auto split = content_split(poly);
  std::ostringstream os;
  if (split.scale == Rational(1)) {
    os << split.primitive;
  } else {
    os << split.scale << " * (" << split.primitive << ')';
  }
  return os.str();
}

std::string cmd_witness(std::uint64_t n, std::uint64_t p) {
  if (!is_prime(p)) throw UsageError("not a prime base: " + std::to_string(p));
  const std::uint64_t m = n + 1;
  if (!within_bound_M(p, n) || digit_sum(m, p) < p) throw UsageError("p is not a factor of q_n");
  if (p == 2) throw UsageError("the digit-filling witness is constructed for odd primes only");
  const auto w = marble_witness(m, p);
  const auto alpha = digits(m, p).digits;

  std::ostringstream os;
  os << "n = " << n << ", m = " << m << ", p = " << p << '\n';
  os << "digits of m (low to high):";
  for (auto d : alpha) os << ' ' << d;
  os << "\nbeta' digits (low to high):";
  for (auto d : w.beta_digits) os << ' ' << d;
  os << "\nb = " << w.b << '\n';
  os << "j = " << w.j << '\n';
  os << "binom(" << m << ", " << w.b << ") mod " << p << " = " << lucas_binom_mod(m, w.b, p) << '\n';
  return os.str();
}

std::vector<BenchRow> cmd_bench(std::uint64_t max_n, const std::vector<Method>& methods, bool spot,
                                unsigned workers) {
  if (methods.empty()) throw UsageError("bench needs at least one method");
  const std::uint64_t first = spot ? max_n : 0;
  std::vector<BenchRow> rows;
  std::optional<std::vector<BigInt>> reference;
  for (auto method : methods) {
    double best = std::numeric_limits<double>::infinity();
    std::vector<BigInt> values;
    for (int run = 0; run < kBenchRuns; ++run) {
      const auto start = std::chrono::steady_clock::now();
      values = compute_q_values(first, max_n, method, workers);
      const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
      best = std::min(best, elapsed.count());
    }
    if (reference && values != *reference) {
      throw ArithmeticBug("method " + to_string(method) + " disagrees with " + to_string(methods.front()));
    }
    if (!reference) reference = values;
    BigInt sum = 0;
    for (const auto& v : values) sum += v;
    rows.push_back({method, kBenchRuns, best, sum, values.back()});
  }
  return rows;
}

void write_bench(std::ostream& os, std::uint64_t max_n, const std::vector<BenchRow>& rows, Format format) {
  if (format == Format::csv) {
    os << "method,max_n,runs,min_ms,q_last,value_sum\n";
    for (const auto& r : rows) {
      os << to_string(r.method) << ',' << max_n << ',' << r.runs << ',' << std::fixed << std::setprecision(3)
         << r.min_ms << ',' << r.last << ',' << r.value_sum << '\n';
    }
    return;
  }
  os << std::left << std::setw(10) << "method" << std::setw(10) << "max_n" << std::setw(6) << "runs"
     << std::setw(14) << "min_ms" << std::setw(16) << "q_last" << "value_sum" << '\n';
  for (const auto& r : rows) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(3) << r.min_ms;
    os << std::left << std::setw(10) << to_string(r.method) << std::setw(10) << max_n << std::setw(6) << r.runs
       << std::setw(14) << ms.str() << std::setw(16) << r.last.get_str() << r.value_sum << '\n';
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power-sum and Bernoulli-polynomial denominators by several independent routes",
               "powersum-denoms"};
  app.require_subcommand(1);
  RunConfig config;
  std::vector<std::string> bench_method_names{"formula", "brute"};

  const auto add_format = [&](CLI::App* sub, const std::map<std::string, Format>& allowed) {
    sub->add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(allowed, CLI::ignore_case));
  };

  auto* seq = app.add_subcommand("seq", "Print a sequence over an index range");
  seq->add_option("--seq", config.sequence, "d, q, Dclausen or Dpoly")
      ->transform(CLI::CheckedTransformer(kSequenceNames));
  seq->add_option("--from", config.from, "First index");
  seq->add_option("--to", config.to, "Last index");
  seq->add_option("--method", config.method, "formula, epsilon, psets or brute")
      ->transform(CLI::CheckedTransformer(kMethodNames, CLI::ignore_case));
  add_format(seq, kFormatNames);

  auto* poly = app.add_subcommand("poly", "Print 1^n + ... + x^n (or up to (x-1)^n) as 1/d * p_n(x)");
  poly->add_option("n", config.index, "Power n")->required();
  poly->add_flag("--shifted", config.shifted, "Sum up to x^n instead of (x-1)^n");

  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("--suite", config.suite, "agreement, clausen, hermite, bounds, witnesses, almkvist or all");
  verify->add_option("--max-n", config.max_n, "Largest index checked");
  verify->add_option("--workers", config.workers, "Worker threads")->check(CLI::PositiveNumber);

  auto* witness = app.add_subcommand("witness", "Show the digit-filling witness for an odd prime p | q_n");
  witness->add_option("n", config.index, "Index n")->required();
  witness->add_option("p", config.prime, "Odd prime p")->required();

  auto* bench = app.add_subcommand("bench", "Time q_0..q_max_n by several methods");
  bench->add_option("--max-n", config.max_n, "Largest index");
  bench->add_option("--method", bench_method_names, "Methods to time (repeatable)")
      ->check(CLI::IsMember({"formula", "epsilon", "psets", "brute"}));
  bench->add_option("--workers", config.workers, "Worker threads")->check(CLI::PositiveNumber);
  bench->add_flag("--spot", config.spot, "Compute only q_max_n");
  add_format(bench, {{"plain", Format::plain}, {"csv", Format::csv}});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*seq) {
      write_records(out, cmd_seq(config), config.format, config.method);
    } else if (*poly) {
      out << cmd_poly(config.index, config.shifted) << '\n';
    } else if (*verify) {
      if (!is_known_suite(config.suite)) throw UsageError("unknown suite: " + config.suite);
      bool ok = true;
      for (const auto& report : run_suites(config.suite, config.max_n, config.workers)) {
        out << report.name << ": " << report.passed << " passed, " << report.failed << " failed\n";
        for (const auto& f : report.failures) out << "  " << f << '\n';
        ok = ok && report.ok();
      }
      out << (ok ? "all suites passed" : "verification FAILED") << '\n';
      return ok ? kExitOk : kExitVerifyFailed;
    } else if (*witness) {
      out << cmd_witness(config.index, config.prime);
    } else if (*bench) {
      for (const auto& name : bench_method_names) config.bench_methods.push_back(kMethodNames.at(name));
      write_bench(out, config.max_n, cmd_bench(config.max_n, config.bench_methods, config.spot, config.workers),
                  config.format);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ArithmeticBug& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitOk;
}

}  // namespace psd::cli
