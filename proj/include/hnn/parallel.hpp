// Bounded analysis parallelism.  The env var HNN_FORGE_THREADS (integer
// >= 1) caps the worker count; unset or malformed values mean one worker.
// Callers must keep results index-addressed so the merged outcome is
// independent of scheduling.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace hnn {

inline std::size_t thread_count() {
  const char* env = std::getenv("HNN_FORGE_THREADS");
  if (env == nullptr) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return 1;
  return static_cast<std::size_t>(v);
}

// Runs fn(begin, end) over a contiguous partition of [0, n).
template <class F>
void parallel_chunks(std::size_t n, F&& fn) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min(thread_count(), n));
  if (workers == 1) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t b = w * chunk;
    const std::size_t e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace hnn
