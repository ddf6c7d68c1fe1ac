#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace psd {

/// Evaluates fn(i) for i in [first, last] on `workers` threads, index i going
/// to worker (i - first) % workers. Results come back in index order; the
/// first exception thrown by any worker is rethrown here.
template <typename Fn>
auto parallel_map(std::uint64_t first, std::uint64_t last, unsigned workers, Fn fn)
    -> std::vector<std::invoke_result_t<Fn, std::uint64_t>> {
  using Result = std::invoke_result_t<Fn, std::uint64_t>;
  std::vector<Result> results;
  if (last < first) return results;
  const std::uint64_t count = last - first + 1;
  results.resize(count);
  if (workers <= 1 || count == 1) {
    for (std::uint64_t i = 0; i < count; ++i) results[i] = fn(first + i);
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::uint64_t i = w; i < count; i += workers) results[i] = fn(first + i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace psd
