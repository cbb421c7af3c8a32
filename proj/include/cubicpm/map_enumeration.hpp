#pragma once

// Exhaustive generation of rooted planar maps with a prescribed number of
// edges, either k-regular or with arbitrary vertex degrees.
//
// The generator builds canonical codes directly: darts are processed in label
// order and sigma(i) is either an already labeled dart with no sigma-preimage
// yet or the next fresh pair. This mirrors canonicalize() step for step, so
// every complete code is already canonical and each rooted map appears once.
// Planarity is checked on the complete code.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <string>
#include <functional>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "cubicpm/errors.hpp"
#include "cubicpm/rooted_map.hpp"

namespace cubicpm {

struct MapFamily {
  int edges = 0;
  int degree = 0;  // 0: any degree, otherwise every vertex has this degree
};

namespace detail {

class MapGenerator {
 public:
  explicit MapGenerator(MapFamily f) : family_(f) {
    const int n = 2 * f.edges;
    sigma_.assign(n, -1);
    pre_.assign(n, -1);
  }

  // Runs the search from the current state, starting at dart `i`.
  template <typename Visit>
  void run(int i, Visit& visit) {
    const int n = 2 * family_.edges;
    if (i == n) {
      leaf(visit);
      return;
    }
    if (i >= next_) return;  // ran out of labeled darts: disconnected
    for_each_choice(i, [&](int j) {
      link(i, j);
      run(i + 1, visit);
      unlink(i, j);
    });
  }

  // Collects generator copies for every consistent prefix of length `depth`.
  void frontier(int i, int depth, std::vector<std::pair<MapGenerator, int>>& out) {
    const int n = 2 * family_.edges;
    if (i == depth || i == n) {
      out.emplace_back(*this, i);
      return;
    }
    if (i >= next_) return;
    for_each_choice(i, [&](int j) {
      link(i, j);
      frontier(i + 1, depth, out);
      unlink(i, j);
    });
  }

 private:
  template <typename F>
  void for_each_choice(int i, F&& f) {
    const int k = family_.degree;
    int start = i, len_i = 1;
    if (k > 0) {
      while (pre_[start] != -1) {
        start = pre_[start];
        ++len_i;
      }
    }
    for (int j = 0; j < next_; ++j) {
      if (pre_[j] != -1) continue;
      if (k > 0) {
        if (j == start) {
          if (len_i != k) continue;
        } else {
          int len_j = 1;
          for (int x = j; sigma_[x] != -1; x = sigma_[x]) ++len_j;
          if (len_i + len_j > k) continue;
        }
      }
      f(j);
    }
    if (next_ < 2 * family_.edges && (k == 0 || len_i + 1 <= k)) f(next_);
  }

  void link(int i, int j) {
    if (j == next_) {
      fresh_.push_back(true);
      next_ += 2;
    } else {
      fresh_.push_back(false);
    }
    sigma_[i] = j;
    pre_[j] = i;
  }

  void unlink(int i, int j) {
    sigma_[i] = -1;
    pre_[j] = -1;
    if (fresh_.back()) next_ -= 2;
    fresh_.pop_back();
  }

  template <typename Visit>
  void leaf(Visit& visit) {
    if (next_ != 2 * family_.edges) return;
    RootedMap m{sigma_, 0};
    if (euler_characteristic(m) != 2) return;
    visit(m);
  }

  MapFamily family_;
  std::vector<int> sigma_, pre_;
  std::vector<bool> fresh_;
  int next_ = 2;
};

inline void check_family(const MapFamily& f) {
  if (f.edges < 1) throw UsageError("map family: need at least one edge");
  if (f.degree < 0) throw UsageError("map family: negative degree");
  if (f.degree > 0 && (2 * f.edges) % f.degree != 0) throw UsageError("map family: degree does not divide 2E");
}

}  // namespace detail

/// Visits every rooted planar map of the family once, in a fixed order.
template <typename Visit>
void for_each_rooted_map(const MapFamily& family, Visit&& visit) {
  detail::check_family(family);
  detail::MapGenerator g(family);
  g.run(0, visit);
}

/// Sum over all maps of f(map), spread over `threads` workers. T needs += and
/// value-initialization; the reduction is associative so the result does not
/// depend on scheduling.
template <typename T, typename F>
T reduce_rooted_maps(const MapFamily& family, unsigned threads, F&& f) {
  detail::check_family(family);
  if (threads <= 1) {
    T acc{};
    for_each_rooted_map(family, [&](const RootedMap& m) { acc += f(m); });
    return acc;
  }
  std::vector<std::pair<detail::MapGenerator, int>> work;
  detail::MapGenerator root(family);
  root.frontier(0, std::min(2 * family.edges, 8), work);

  std::atomic<std::size_t> cursor{0};
  std::vector<T> partial(threads);
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        auto visit = [&](const RootedMap& m) { partial[t] += f(m); };
        for (std::size_t i = cursor++; i < work.size(); i = cursor++) {
          auto [g, depth] = work[i];
          g.run(depth, visit);
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  T acc{};
  for (auto& p : partial) acc += p;
  return acc;
}

template <typename Pred = bool (*)(const RootedMap&)>
std::vector<RootedMap> collect_rooted_maps(const MapFamily& family, Pred keep = [](const RootedMap&) { return true; }) {
  std::vector<RootedMap> out;
  for_each_rooted_map(family, [&](const RootedMap& m) {
    if (keep(m)) out.push_back(m);
  });
  return out;
}

/// Cubic maps of size n have 2n vertices and 3n edges. Sizes above 4 are
/// refused unless `allow_large` is set (n = 5 has about 10^6 search leaves).
inline MapFamily cubic_family(int n, bool allow_large = false) {
  if (n < 1) throw UsageError("cubic maps: size must be >= 1");
  if (n > 5 || (n == 5 && !allow_large)) throw ResourceError("cubic maps: size " + std::to_string(n) + " exceeds the cap");
  return {3 * n, 3};
}

inline std::vector<RootedMap> enumerate_rooted_cubic_maps(int n, bool allow_large = false) {
  return collect_rooted_maps(cubic_family(n, allow_large));
}

/// 4-regular maps with n vertices (2n edges).
inline std::vector<RootedMap> enumerate_rooted_4regular_maps(int n) {
  if (n < 1 || n > 4) throw UsageError("4-regular maps: vertex count must be in [1, 4]");
  return collect_rooted_maps(MapFamily{2 * n, 4});
}

/// All rooted planar maps with the given number of edges.
inline std::vector<RootedMap> enumerate_rooted_maps(int edges) {
  if (edges < 1 || edges > 6) throw UsageError("rooted maps: edge count must be in [1, 6]");
  return collect_rooted_maps(MapFamily{edges, 0});
}

}  // namespace cubicpm
