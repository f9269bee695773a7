#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "cubepack/coloring.hpp"
#include "cubepack/errors.hpp"

namespace cubepack {

namespace {

// A(n, d) for tiny n by exhaustive subset scan: the largest vertex set of
// Q_n with pairwise distance >= d.
int max_spread_set(int n, int d) {
  const int V = 1 << n;
  int best = 1;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << V); ++s) {
    if (std::popcount(s) <= best) continue;
    std::uint32_t rest = s;
    bool ok = true;
    while (rest && ok) {
      int a = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint32_t others = rest;
      while (others) {
        int b = std::countr_zero(others);
        others &= others - 1;
        if (std::popcount(static_cast<std::uint32_t>(a ^ b)) < d) {
          ok = false;
          break;
        }
      }
    }
    if (ok) best = std::popcount(s);
  }
  return best;
}

struct ExactSolver {
  int n = 0;
  int V = 0;
  std::vector<int> color;
  std::vector<int> count;
  std::vector<int> cap;   // cap[c]: at most this many vertices of color c
  int best = 0;

  bool feasible(int v, int c) const {
    if (count[static_cast<std::size_t>(c)] >= cap[static_cast<std::size_t>(c)]) {
      return false;
    }
    for (int u = 0; u < v; ++u) {
      if (color[static_cast<std::size_t>(u)] == c &&
          std::popcount(static_cast<std::uint32_t>(u ^ v)) < c + 1) {
        return false;
      }
    }
    return true;
  }

  void dfs(int v, int max_used) {
    if (max_used >= best) return;
    if (v == V) {
      best = max_used;
      return;
    }
    // Remaining vertices must fit within the caps of colors < best.
    int avail = 0;
    for (int c = 1; c < best; ++c) {
      avail += std::max(0, cap[static_cast<std::size_t>(c)] -
                               count[static_cast<std::size_t>(c)]);
    }
    if (avail < V - v) return;
    for (int c = 1; c < best; ++c) {
      if (!feasible(v, c)) continue;
      color[static_cast<std::size_t>(v)] = c;
      ++count[static_cast<std::size_t>(c)];
      dfs(v + 1, std::max(max_used, c));
      --count[static_cast<std::size_t>(c)];
      color[static_cast<std::size_t>(v)] = 0;
    }
  }
};

}  // namespace

int exact_packing_chromatic(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n > 4) {
    throw BudgetError("exact search out of budget: n > 4");
  }
  ExactSolver s;
  s.n = n;
  s.V = 1 << n;
  s.color.assign(static_cast<std::size_t>(s.V), 0);
  s.count.assign(static_cast<std::size_t>(s.V) + 2, 0);
  s.cap.assign(static_cast<std::size_t>(s.V) + 2, 1);
  // Two vertices of color c need distance >= c+1; past the diameter the
  // color is usable once only.
  for (int c = 1; c <= s.V; ++c) {
    s.cap[static_cast<std::size_t>(c)] =
        c + 1 <= n ? max_spread_set(n, c + 1) : 1;
  }

  // Greedy coloring in vertex order gives the initial upper bound.
  std::vector<int> greedy(static_cast<std::size_t>(s.V), 0);
  int greedy_max = 0;
  for (int v = 0; v < s.V; ++v) {
    for (int c = 1;; ++c) {
      bool ok = true;
      for (int u = 0; u < v; ++u) {
        if (greedy[static_cast<std::size_t>(u)] == c &&
            std::popcount(static_cast<std::uint32_t>(u ^ v)) < c + 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        greedy[static_cast<std::size_t>(v)] = c;
        greedy_max = std::max(greedy_max, c);
        break;
      }
    }
  }
  s.best = greedy_max;
  s.dfs(0, 0);
  return s.best;
}

}  // namespace cubepack
