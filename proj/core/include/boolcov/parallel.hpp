#pragma once

// Thread-count resolution (BOOLCOV_THREADS override) and a block-partition
// parallel loop whose results cannot depend on the thread count.

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace boolcov {

// requested > 0 wins; otherwise the BOOLCOV_THREADS environment variable,
// then hardware concurrency.
inline int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BOOLCOV_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && n > 0 && n < 4096) return static_cast<int>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs body(i) for i in [0, n), split into contiguous blocks. Each index
// must write only to its own output slot; the partition then affects which
// thread computes a value, never the value itself.
template <class F>
void parallel_for(long n, int threads, F&& body) {
  if (n <= 0) return;
  int t = static_cast<int>(
      std::min<long>(resolve_thread_count(threads), n));
  if (t <= 1) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(t);
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (int w = 0; w < t; ++w) {
    long lo = n * w / t;
    long hi = n * (w + 1) / t;
    pool.emplace_back([&errors, &body, w, lo, hi] {
      try {
        for (long i = lo; i < hi; ++i) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

} // namespace boolcov
