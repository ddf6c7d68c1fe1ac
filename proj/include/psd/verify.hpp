#pragma once

// Named invariant suites shared by `powersum-denoms verify` and the
// acceptance tests. Each suite counts one case per index (or pair) checked.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace psd {

struct SuiteReport {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  /// First few failure descriptions.
  std::vector<std::string> failures;

  [[nodiscard]] bool ok() const { return failed == 0; }
};

/// agreement, clausen, hermite, bounds, witnesses, almkvist.
[[nodiscard]] const std::vector<std::string>& suite_names();

[[nodiscard]] bool is_known_suite(std::string_view name);

/// Runs one suite, or every suite for "all". Throws PreconditionError on an
/// unknown name.
[[nodiscard]] std::vector<SuiteReport> run_suites(std::string_view name, std::uint64_t max_n,
                                                  unsigned workers = 1);

}  // namespace psd
