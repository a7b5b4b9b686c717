#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace groupobs {

// Runs fn(begin, end, worker) over contiguous slices of [0, count).
// Each slice is processed by exactly one worker; callers write results
// into per-index slots so the outcome does not depend on `workers`.
// The first exception thrown by any worker is rethrown on the caller.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  if (count == 0) return;
  const std::size_t pool =
      std::clamp<std::size_t>(workers == 0 ? 1 : workers, 1, count);
  if (pool == 1) {
    fn(std::size_t{0}, count, 0u);
    return;
  }

  std::vector<std::exception_ptr> errors(pool);
  std::vector<std::thread> threads;
  threads.reserve(pool);
  const std::size_t chunk = (count + pool - 1) / pool;
  for (std::size_t w = 0; w < pool; ++w) {
    const std::size_t begin = std::min(count, w * chunk);
    const std::size_t end = std::min(count, begin + chunk);
    threads.emplace_back([&, begin, end, w] {
      try {
        if (begin < end) fn(begin, end, static_cast<unsigned>(w));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace groupobs
