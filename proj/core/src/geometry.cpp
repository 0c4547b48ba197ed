#include "schelling/geometry.hpp"

#include <cstdlib>
#include <string>

#include "schelling/errors.hpp"

namespace schelling {

namespace {

int wrap(int v, int n) {
  int r = (v - 1) % n;
  if (r < 0) r += n;
  return r + 1;
}

}  // namespace

TorusGrid::TorusGrid(int n) : n_(n) {
  if (n < 3) {
    throw DomainError("torus side must be at least 3, got " + std::to_string(n));
  }
  neighbors_.resize(static_cast<std::size_t>(n * n));
  for (int row = 1; row <= n; ++row) {
    for (int col = 1; col <= n; ++col) {
      auto& out = neighbors_[static_cast<std::size_t>((row - 1) * n + col - 1)];
      std::size_t k = 0;
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          if (dr == 0 && dc == 0) continue;
          out[k++] = (wrap(row + dr, n) - 1) * n + wrap(col + dc, n);
        }
      }
    }
  }
}

bool TorusGrid::contains(CellRef c) const noexcept {
  return c.row >= 1 && c.row <= n_ && c.col >= 1 && c.col <= n_ && c.id == (c.row - 1) * n_ + c.col;
}

CellRef TorusGrid::cell(int row, int col) const {
  if (row < 1 || row > n_ || col < 1 || col > n_) {
    throw DomainError("cell (" + std::to_string(row) + ", " + std::to_string(col) +
                      ") outside a torus of side " + std::to_string(n_));
  }
  return CellRef{row, col, (row - 1) * n_ + col};
}

CellRef TorusGrid::cell(int id) const {
  if (id < 1 || id > n_ * n_) {
    throw DomainError("cell id " + std::to_string(id) + " outside [1, " + std::to_string(n_ * n_) + "]");
  }
  return CellRef{(id - 1) / n_ + 1, (id - 1) % n_ + 1, id};
}

CellRef TorusGrid::shifted(CellRef c, int drow, int dcol) const {
  return cell(wrap(c.row + drow, n_), wrap(c.col + dcol, n_));
}

int TorusGrid::axis_separation(int u, int w) const noexcept {
  const int d = std::abs(u - w);
  return d < n_ - d ? d : n_ - d;
}

CellRef cell_id(int row, int col, const TorusGrid& grid) { return grid.cell(row, col); }

std::array<CellRef, TorusGrid::kNeighborhoodSize> moore_neighborhood(CellRef cell, const TorusGrid& grid) {
  if (!grid.contains(cell)) throw DomainError("invalid cell id " + std::to_string(cell.id));
  std::array<CellRef, TorusGrid::kNeighborhoodSize> out{};
  const auto& ids = grid.neighbor_ids(cell.id);
  for (std::size_t i = 0; i < ids.size(); ++i) out[i] = grid.cell(ids[i]);
  return out;
}

bool moore_adjacent(CellRef a, CellRef b, const TorusGrid& grid) {
  if (a.id == b.id) return false;
  return grid.axis_separation(a.row, b.row) <= 1 && grid.axis_separation(a.col, b.col) <= 1;
}

int torus_steps(CellRef a, CellRef b, const TorusGrid& grid) {
  return grid.axis_separation(a.row, b.row) + grid.axis_separation(a.col, b.col);
}

double torus_distance(CellRef a, CellRef b, const TorusGrid& grid) {
  return static_cast<double>(torus_steps(a, b, grid)) / static_cast<double>(grid.distance_scale());
}

}  // namespace schelling
