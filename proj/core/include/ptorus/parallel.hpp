#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace ptorus {

/// Worker count from the PTORUS_WORKERS environment variable, falling back
/// to hardware_concurrency.
inline int env_worker_count(const char* var = "PTORUS_WORKERS") {
  if (const char* s = std::getenv(var)) {
    int v = std::atoi(s);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Runs body(i) for i in [0, n). Callers keep determinism by writing only
/// to slot i of preallocated output. The first pending exception is
/// rethrown after all workers join.
template <class F>
void parallel_for(long long n, int workers, F&& body) {
  if (n <= 0) return;
  workers = static_cast<int>(
      std::min<long long>(std::max(workers, 1), n));
  if (workers == 1) {
    for (long long i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<long long> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (long long i = next.fetch_add(1); i < n; i = next.fetch_add(1))
          body(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace ptorus
