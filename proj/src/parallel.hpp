#ifndef LSR_SRC_PARALLEL_HPP
#define LSR_SRC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lsr::detail {

/// Evaluates fn(i) for i in [0, count) on a bounded pool; results keep index order.
template <typename Fn>
auto parallel_map(int count, Fn&& fn) -> std::vector<decltype(fn(0))> {
  using Result = decltype(fn(0));
  std::vector<Result> out(static_cast<std::size_t>(std::max(count, 0)));
  if (count <= 0) return out;

  const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, count);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        out[static_cast<std::size_t>(i)] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace lsr::detail

#endif  // LSR_SRC_PARALLEL_HPP
