#pragma once

// Counting and combinatorial oracles written without the library: closed
// forms by recurrences, set partitions by direct recursion, and crossing by
// the four-point interleaving test on the boundary circle.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

inline std::int64_t binomial(int n, int k) {
  std::vector<std::vector<std::int64_t>> row(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    row[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i + 1), 1);
    for (int j = 1; j < i; ++j) {
      row[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
  }
  if (k < 0 || k > n) return 0;
  return row[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Sum of Stirling numbers of the second kind.
inline std::int64_t bell(int n) {
  std::vector<std::vector<std::int64_t>> s(static_cast<std::size_t>(n + 1), std::vector<std::int64_t>(static_cast<std::size_t>(n + 1), 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= i; ++k) {
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          k * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)] + s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)];
    }
  }
  std::int64_t total = 0;
  for (int k = 0; k <= n; ++k) total += s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  return total;
}

// Segner's recurrence.
inline std::int64_t catalan(int n) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(n + 1), 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int i = 0; i < m; ++i) c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
  }
  return c[static_cast<std::size_t>(n)];
}

inline std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline std::int64_t power(std::int64_t b, int e) { return e == 0 ? 1 : b * power(b, e - 1); }

// Every set partition of {0..m-1} as a block label per point, by placing
// each point into an existing block or a new one.
inline void set_partitions(int m, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> label(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> place = [&](int point, int blocks) {
    if (point == m) {
      visit(label);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[static_cast<std::size_t>(point)] = b;
      place(point + 1, std::max(blocks, b + 1));
    }
  };
  place(0, 0);
}

// Points listed in boundary order; blocks cross when a < b < c < d with
// a, c in one block and b, d in another.
inline bool crossing(const std::vector<int>& label_in_boundary_order) {
  const int m = static_cast<int>(label_in_boundary_order.size());
  auto at = [&](int i) { return label_in_boundary_order[static_cast<std::size_t>(i)]; };
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        for (int d = c + 1; d < m; ++d)
          if (at(a) == at(c) && at(b) == at(d) && at(a) != at(b)) return true;
  return false;
}

// Labels of the 2n points of a degree-n partition are stored as upper
// 1..n then lower 1'..n'; the boundary order runs 1..n, n'..1'.
inline std::vector<int> boundary_order(const std::vector<int>& label, int n) {
  std::vector<int> out(label.begin(), label.begin() + n);
  for (int x = n; x >= 1; --x) out.push_back(label[static_cast<std::size_t>(n + x - 1)]);
  return out;
}

inline std::int64_t count_partitions(int n, const std::function<bool(const std::vector<int>&)>& keep) {
  std::int64_t count = 0;
  set_partitions(2 * n, [&](const std::vector<int>& l) { count += keep(l) ? 1 : 0; });
  return count;
}

inline bool planar_partition(const std::vector<int>& label, int n) { return !crossing(boundary_order(label, n)); }

inline bool full_domain(const std::vector<int>& label, int n) {
  for (int x = 0; x < n; ++x) {
    bool reaches = false;
    for (int y = n; y < 2 * n; ++y) reaches = reaches || label[static_cast<std::size_t>(x)] == label[static_cast<std::size_t>(y)];
    if (!reaches) return false;
  }
  return true;
}

// Equivalences on n points with no two classes crossing on a line.
inline std::int64_t count_planar_equivalences(int n) {
  std::int64_t count = 0;
  set_partitions(n, [&](const std::vector<int>& l) { count += crossing(l) ? 0 : 1; });
  return count;
}

}  // namespace oracle
