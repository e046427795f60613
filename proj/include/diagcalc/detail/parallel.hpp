#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace diagcalc::detail {

inline unsigned worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return std::clamp(hw, 1u, 8u);
}

/// Smallest row index r < rows for which row_fails(r) returns a witness,
/// scanning rows in parallel. The returned witness is the one produced for
/// that row, so the result does not depend on scheduling.
template <class W, class RowCheck>
std::optional<std::pair<std::size_t, W>> first_failing_row(std::size_t rows, RowCheck row_fails) {
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::mutex guard;
  std::optional<std::pair<std::size_t, W>> found;

  auto work = [&] {
    for (;;) {
      const std::size_t r = next.fetch_add(1);
      if (r >= rows || r > best.load()) return;
      std::optional<W> w = row_fails(r);
      if (!w) continue;
      std::lock_guard lock(guard);
      if (!found || r < found->first) {
        found.emplace(r, std::move(*w));
        best.store(r);
      }
    }
  };

  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(rows, 1)));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  return found;
}

}  // namespace diagcalc::detail
