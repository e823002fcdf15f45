#ifndef WEINSTEIN_PARALLEL_HPP
#define WEINSTEIN_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace weinstein {

/// Worker count: WEINSTEIN_THREADS if set to a positive integer, otherwise
/// the number of hardware threads.
inline unsigned default_thread_count() {
  if (const char* env = std::getenv("WEINSTEIN_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Evaluates fn(i) for i in [0, count) on up to `threads` workers. Results
/// are stored by index, so the output order never depends on scheduling.
/// The first exception thrown by fn is rethrown after all workers join.
template <class Fn>
auto parallel_map(std::size_t count, Fn fn, unsigned threads = 0)
    -> std::vector<decltype(fn(std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}));
  std::vector<Result> results(count);
  if (threads == 0)
    threads = default_thread_count();
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const auto n = static_cast<std::size_t>(threads) < count ? threads : count;
  pool.reserve(n);
  for (std::size_t t = 0; t < n; ++t)
    pool.emplace_back(worker);
  for (auto& t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);
  return results;
}

} // namespace weinstein

#endif
