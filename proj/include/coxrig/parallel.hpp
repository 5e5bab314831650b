#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace coxrig {

/// Worker count: hardware concurrency capped by the COXRIG_THREADS
/// environment variable (positive integer).
inline unsigned worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("COXRIG_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && static_cast<unsigned>(v) < n) n = static_cast<unsigned>(v);
  }
  return n;
}

/// Run fn(i) for i in [0, count); results land in caller-owned slots, so
/// output order is deterministic regardless of scheduling.
inline void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
  unsigned workers = worker_count();
  if (workers <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  if (workers > count) workers = static_cast<unsigned>(count);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    threads.emplace_back([&, w]() {
      for (size_t i = w; i < count; i += workers) fn(i);
    });
  for (std::thread& t : threads) t.join();
}

}  // namespace coxrig
