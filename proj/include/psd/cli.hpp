#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psd/exact_poly.hpp"

namespace psd::cli {

enum class Command { seq, poly, verify, witness, bench };
enum class Sequence { d, q, Dclausen, Dpoly };
enum class Format { plain, csv, bfile };
enum class Method { formula, epsilon, psets, brute };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Bad flags, bad ranges, or a method that does not apply to a sequence.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SequenceRecord {
  std::uint64_t n = 0;
  BigInt value;

  friend bool operator==(const SequenceRecord&, const SequenceRecord&) = default;
};

struct RunConfig {
  Command command = Command::seq;
  Sequence sequence = Sequence::q;
  std::uint64_t from = 0;
  std::uint64_t to = 20;
  Format format = Format::plain;
  Method method = Method::formula;
  std::vector<Method> bench_methods;
  std::string suite = "all";
  std::uint64_t max_n = 100;
  unsigned workers = 1;
  bool shifted = false;
  bool spot = false;
  std::uint64_t index = 0;  ///< n for poly and witness
  std::uint64_t prime = 0;  ///< p for witness
};

[[nodiscard]] std::string to_string(Method m);
[[nodiscard]] std::string to_string(Sequence s);

/// Records for config.sequence over [from, to]; Dclausen yields even n only.
/// Throws UsageError on invalid ranges or method/sequence mismatch.
[[nodiscard]] std::vector<SequenceRecord> cmd_seq(const RunConfig& config);

void write_records(std::ostream& os, const std::vector<SequenceRecord>& records, Format format,
                   Method method);

/// Parses OEIS b-file lines "n a(n)". Blank lines and '#' comments are skipped.
[[nodiscard]] std::vector<SequenceRecord> parse_bfile(std::istream& is);

/// "1/d * (p_n(x))" for the shifted (1^n + ... + x^n) or unshifted
/// (1^n + ... + (x-1)^n) power sum, or just "p_n(x)" when d = 1.
[[nodiscard]] std::string cmd_poly(std::uint64_t n, bool shifted);

/// Multiline report of the digit-filling witness for p | q_n.
/// Throws UsageError("p is not a factor of q_n") when p does not divide q_n.
[[nodiscard]] std::string cmd_witness(std::uint64_t n, std::uint64_t p);

struct BenchRow {
  Method method;
  std::uint64_t runs = 0;
  double min_ms = 0.0;
  BigInt value_sum;  ///< sum of the computed q values
  BigInt last;       ///< q_{max_n}
};

/// Times each method over q_0..q_{max_n} (or only q_{max_n} when spot is set).
/// All methods must produce identical values before any timing is returned.
[[nodiscard]] std::vector<BenchRow> cmd_bench(std::uint64_t max_n, const std::vector<Method>& methods,
                                              bool spot, unsigned workers);

void write_bench(std::ostream& os, std::uint64_t max_n, const std::vector<BenchRow>& rows, Format format);

/// Parses argv and runs the command. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace psd::cli
