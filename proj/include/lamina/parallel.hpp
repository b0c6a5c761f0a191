#pragma once

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace lamina {

/// LAMINA_THREADS if set to a positive integer, otherwise fallback.
inline int thread_count_from_env(int fallback) {
  if (const char* env = std::getenv("LAMINA_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return fallback;
}

/// Calls fn(i) for i in [0, n) on up to `width` threads. fn must only write
/// to slot i of whatever it fills; results are then independent of scheduling.
/// The first exception thrown by any call is rethrown here.
template <class Fn>
void parallel_for(std::size_t n, int width, Fn&& fn) {
  if (width <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  const auto count = static_cast<std::size_t>(width) < n ? static_cast<std::size_t>(width) : n;
  pool.reserve(count);
  for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace lamina
