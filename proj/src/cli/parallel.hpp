#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lpa::workbench {

/// Applies f to every item on a small worker pool; results keep the input
/// order. The first exception thrown by f is rethrown after all workers stop.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F f) -> std::vector<decltype(f(items.front()))> {
  using R = decltype(f(items.front()));
  std::vector<R> out(items.size());
  const std::size_t workers =
      std::min<std::size_t>(items.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        out[i] = f(items[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = items.size();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace lpa::workbench
