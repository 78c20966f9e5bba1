#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace torsionlab {

// Worker count: TORSIONLAB_THREADS caps parallelism, 0 or unset means auto.
inline unsigned thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("TORSIONLAB_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap > 0) return std::min<unsigned>(hw, static_cast<unsigned>(cap));
    } catch (...) {
    }
  }
  return hw;
}

// Runs fn(i) for i in [0, count). Results must be written to index-owned
// slots; ordering of observable output is then independent of scheduling.
inline void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
  const unsigned workers = std::min<size_t>(thread_budget(), count);
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t]() {
      for (size_t i = t; i < count; i += workers) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace torsionlab
