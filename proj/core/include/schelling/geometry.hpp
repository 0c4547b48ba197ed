#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace schelling {

/// A cell on the torus. Rows and columns are 1-based; `id` is the linear
/// label (row - 1) * n + col, also 1-based.
struct CellRef {
  int row = 1;
  int col = 1;
  int id = 1;

  friend constexpr bool operator==(const CellRef& a, const CellRef& b) { return a.id == b.id; }
  friend constexpr auto operator<=>(const CellRef& a, const CellRef& b) { return a.id <=> b.id; }
};

/// Square n x n grid whose opposite edges are identified.
///
/// The Moore neighborhood of every cell is precomputed once, so neighborhood
/// queries in the hot loop of the dynamics are table lookups.
class TorusGrid {
 public:
  static constexpr int kNeighborhoodSize = 8;

  /// Throws DomainError when n < 3 (fewer than 8 distinct Moore neighbors).
  explicit TorusGrid(int n);

  [[nodiscard]] int side() const noexcept { return n_; }
  [[nodiscard]] int cell_count() const noexcept { return n_ * n_; }

  /// Throws DomainError unless 1 <= row, col <= n.
  [[nodiscard]] CellRef cell(int row, int col) const;
  /// Throws DomainError unless 1 <= id <= n^2.
  [[nodiscard]] CellRef cell(int id) const;

  /// Cell reached from `c` by a (possibly negative) row/col offset, with wrap.
  [[nodiscard]] CellRef shifted(CellRef c, int drow, int dcol) const;

  [[nodiscard]] const std::array<int, kNeighborhoodSize>& neighbor_ids(int id) const {
    return neighbors_[static_cast<std::size_t>(id - 1)];
  }

  /// Wrapped per-axis separation min(|u - w|, n - |u - w|).
  [[nodiscard]] int axis_separation(int u, int w) const noexcept;

  /// Normalization constant of the distance: n for even n, n - 1 for odd n.
  [[nodiscard]] int distance_scale() const noexcept { return n_ % 2 == 0 ? n_ : n_ - 1; }

  [[nodiscard]] bool contains(CellRef c) const noexcept;

 private:
  int n_;
  std::vector<std::array<int, kNeighborhoodSize>> neighbors_;
};

[[nodiscard]] CellRef cell_id(int row, int col, const TorusGrid& grid);

/// The 8 cells around `cell`, wrapped on the torus, in row-major offset order.
[[nodiscard]] std::array<CellRef, TorusGrid::kNeighborhoodSize> moore_neighborhood(CellRef cell,
                                                                                    const TorusGrid& grid);

/// True when `a` and `b` are distinct Moore neighbors.
[[nodiscard]] bool moore_adjacent(CellRef a, CellRef b, const TorusGrid& grid);

/// Normalized wrapped Manhattan distance in [0, 1]; exactly 1 at the antipode.
[[nodiscard]] double torus_distance(CellRef a, CellRef b, const TorusGrid& grid);

/// Integer numerator of torus_distance (sum of wrapped per-axis separations).
[[nodiscard]] int torus_steps(CellRef a, CellRef b, const TorusGrid& grid);

}  // namespace schelling
