#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the geometry or metrics code it is meant to check.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <vector>

namespace oracle {

/// Shortest 4-neighbor path length between (r1, c1) and (r2, c2) on an n x n
/// torus, by breadth-first search. Coordinates are 1-based.
inline int bfs_steps(int n, int r1, int c1, int r2, int c2) {
  std::vector<int> dist(static_cast<std::size_t>(n * n), -1);
  auto idx = [n](int r, int c) { return static_cast<std::size_t>((r - 1) * n + (c - 1)); };
  std::deque<std::pair<int, int>> queue{{r1, c1}};
  dist[idx(r1, c1)] = 0;
  while (!queue.empty()) {
    auto [r, c] = queue.front();
    queue.pop_front();
    if (r == r2 && c == c2) return dist[idx(r, c)];
    const int moves[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (const auto& m : moves) {
      const int nr = (r - 1 + m[0] + n) % n + 1;
      const int nc = (c - 1 + m[1] + n) % n + 1;
      if (dist[idx(nr, nc)] < 0) {
        dist[idx(nr, nc)] = dist[idx(r, c)] + 1;
        queue.emplace_back(nr, nc);
      }
    }
  }
  return -1;
}

/// Moore adjacency by explicit enumeration of the 8 wrapped offsets.
inline bool moore_adjacent(int n, int r1, int c1, int r2, int c2) {
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      if (dr == 0 && dc == 0) continue;
      if ((r1 - 1 + dr + n) % n + 1 == r2 && (c1 - 1 + dc + n) % n + 1 == c2) return true;
    }
  }
  return false;
}

struct Placement {
  int n = 0;
  std::vector<int> row, col;  // per agent, 1-based
  std::vector<int> red;       // 1 for red, 0 for blue
};

/// Dense weight matrix, w[i][j] = 1 iff agents i and j are Moore-adjacent.
inline std::vector<std::vector<int>> weight_matrix(const Placement& p) {
  const std::size_t m = p.red.size();
  std::vector<std::vector<int>> w(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && moore_adjacent(p.n, p.row[i], p.col[i], p.row[j], p.col[j])) w[i][j] = 1;
    }
  }
  return w;
}

/// Freeman index straight from the formula, counting each unordered pair once.
inline double freeman(const std::vector<std::vector<int>>& w, const std::vector<int>& red) {
  const std::size_t m = red.size();
  double edges = 0;
  double cross = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (w[i][j] == 0) continue;
      edges += 1;
      if (red[i] != red[j]) cross += 1;
    }
  }
  if (edges == 0) return 0.0;
  const double a = std::accumulate(red.begin(), red.end(), 0.0);
  const double b = static_cast<double>(m) - a;
  const double expected = edges * 2.0 * a * b / ((a + b) * (a + b - 1.0));
  return std::max(0.0, (expected - cross) / expected);
}

inline double moran(const std::vector<std::vector<int>>& w, const std::vector<int>& red) {
  const std::size_t m = red.size();
  const double mean = std::accumulate(red.begin(), red.end(), 0.0) / static_cast<double>(m);
  double s0 = 0;
  double num = 0;
  double den = 0;
  for (std::size_t i = 0; i < m; ++i) {
    den += (red[i] - mean) * (red[i] - mean);
    for (std::size_t j = 0; j < m; ++j) {
      s0 += w[i][j];
      num += w[i][j] * (red[i] - mean) * (red[j] - mean);
    }
  }
  return (static_cast<double>(m) / s0) * (num / den);
}

inline double geary(const std::vector<std::vector<int>>& w, const std::vector<int>& red) {
  const std::size_t m = red.size();
  const double mean = std::accumulate(red.begin(), red.end(), 0.0) / static_cast<double>(m);
  double s0 = 0;
  double num = 0;
  double den = 0;
  for (std::size_t i = 0; i < m; ++i) {
    den += (red[i] - mean) * (red[i] - mean);
    for (std::size_t j = 0; j < m; ++j) {
      s0 += w[i][j];
      num += w[i][j] * (red[i] - red[j]) * (red[i] - red[j]);
    }
  }
  return (static_cast<double>(m) - 1.0) * num / (2.0 * s0 * den);
}

/// Spearman rank correlation with average ranks for ties.
inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < order.size();) {
      std::size_t j = i;
      while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
      const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
      for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
      i = j + 1;
    }
    return r;
  };
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0 || syy == 0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace oracle
