#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace dnacodes::detail {

inline unsigned default_workers() noexcept {
  const unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : h;
}

// Runs fn(begin, end, worker) over contiguous slices of [0, count). Slice
// boundaries depend only on (count, workers); callers reduce the per-worker
// results in worker order. The first exception thrown by any worker is
// rethrown on the calling thread.
template <class Fn>
void parallel_slices(std::size_t count, unsigned workers, Fn&& fn) {
  if (count == 0) return;
  const std::size_t w = std::clamp<std::size_t>(workers, 1, count);
  if (w == 1) {
    fn(std::size_t{0}, count, 0u);
    return;
  }
  std::vector<std::exception_ptr> errors(w);
  {
    std::vector<std::jthread> pool;
    pool.reserve(w);
    for (std::size_t k = 0; k < w; ++k) {
      const std::size_t begin = count * k / w;
      const std::size_t end = count * (k + 1) / w;
      pool.emplace_back([&, begin, end, k] {
        try {
          fn(begin, end, static_cast<unsigned>(k));
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace dnacodes::detail
