#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace vsl {

/// Worker cap for parallel_map; 0 means hardware concurrency.
int& thread_count();

namespace detail {
inline thread_local bool in_worker = false;
}

/// Applies fn to every item; results keep the input order regardless of scheduling.
/// Nested calls from inside a worker run serially.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, Fn fn) -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  std::vector<R> out(items.size());
  int workers = thread_count();
  if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::min<int>(workers, static_cast<int>(items.size()));
  if (workers <= 1 || detail::in_worker) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    detail::in_worker = true;
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        out[i] = fn(items[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
    detail::in_worker = false;
  };
  std::vector<std::thread> pool;
  for (int k = 0; k < workers; ++k) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace vsl
