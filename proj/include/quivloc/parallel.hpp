#ifndef QUIVLOC_PARALLEL_HPP
#define QUIVLOC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace quivloc {

/// Worker count from QUIVLOC_THREADS (default 1). Only affects speed.
inline std::size_t workerCount() {
  const char* env = std::getenv("QUIVLOC_THREADS");
  if (env == nullptr) return 1;
  try {
    long n = std::stol(env);
    if (n <= 0) return std::max<std::size_t>(1, std::thread::hardware_concurrency());
    return static_cast<std::size_t>(n);
  } catch (...) {
    return 1;
  }
}

/// out[i] = fn(i) for i in [0, n), computed on up to workerCount() threads.
/// Result order is by index; the first exception thrown is rethrown.
template <class Result, class Fn>
std::vector<Result> parallelMap(std::size_t n, Fn&& fn) {
  std::vector<Result> out(n);
  std::size_t workers = std::min(workerCount(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex errorMutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          out[i] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(errorMutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace quivloc

#endif  // QUIVLOC_PARALLEL_HPP
