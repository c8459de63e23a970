#include "uhp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace uhp {

Grid2D Grid2D::square(std::size_t n, double lo, double hi) {
  if (n < 2) throw std::invalid_argument("grid needs at least 2 points per axis");
  if (!(hi > lo)) throw std::invalid_argument("empty grid extent");
  Grid2D g;
  g.nx = n;
  g.ny = n;
  g.h = (hi - lo) / static_cast<double>(n - 1);
  g.x0 = lo;
  g.y0 = lo;
  return g;
}

void Grid2D::check() const {
  if (nx < 2 || ny < 2) throw std::invalid_argument("grid needs at least 2 points per axis");
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("grid spacing must be positive");
  if (!std::isfinite(x0) || !std::isfinite(y0)) throw std::invalid_argument("grid origin not finite");
}

bool Grid2D::contains(double px, double py) const {
  const double tol = 1e-9 * h;
  return px >= x0 - tol && px <= x_max() + tol && py >= y0 - tol && py <= y_max() + tol;
}

std::size_t Grid2D::nearest(double px, double py) const {
  auto snap = [this](double v, double origin, std::size_t n) {
    const double k = std::round((v - origin) / h);
    return static_cast<std::size_t>(std::clamp(k, 0.0, static_cast<double>(n - 1)));
  };
  return index(snap(px, x0, nx), snap(py, y0, ny));
}

std::array<std::size_t, 4> neighbors(const Grid2D& grid, std::size_t idx) {
  const std::size_t i = grid.col(idx);
  const std::size_t j = grid.row(idx);
  return {i + 1 < grid.nx ? idx + 1 : kNoNeighbor, j + 1 < grid.ny ? idx + grid.nx : kNoNeighbor,
          i > 0 ? idx - 1 : kNoNeighbor, j > 0 ? idx - grid.nx : kNoNeighbor};
}

bool GridProblem::masked(std::size_t idx) const {
  return terminal_cost[idx] == std::numeric_limits<double>::infinity();
}

void GridProblem::check() const {
  grid.check();
  const std::size_t n = grid.size();
  auto sized = [n](const Field& f, const char* name) {
    if (f.size() != n) {
      throw std::invalid_argument(std::string(name) + " field has " + std::to_string(f.size()) +
                                  " values, grid has " + std::to_string(n));
    }
  };
  sized(speed, "speed");
  sized(running_cost, "running cost");
  sized(terminal_cost, "terminal cost");
  sized(rate, "rate");
  for (std::size_t k = 0; k < n; ++k) {
    if (std::isnan(terminal_cost[k]) || terminal_cost[k] == -std::numeric_limits<double>::infinity()) {
      throw std::invalid_argument("terminal cost must be finite or +inf at point " + std::to_string(k));
    }
    if (masked(k)) continue;
    if (!(speed[k] > 0.0) || !std::isfinite(speed[k])) {
      throw std::invalid_argument("speed must be positive at point " + std::to_string(k));
    }
    if (!(running_cost[k] >= 0.0) || !std::isfinite(running_cost[k])) {
      throw std::invalid_argument("running cost must be non-negative at point " + std::to_string(k));
    }
    if (!(rate[k] > 0.0) || !std::isfinite(rate[k])) {
      throw std::invalid_argument("termination rate must be positive at point " + std::to_string(k));
    }
  }
}

GridProblem make_problem(const Grid2D& grid, Field terminal_cost, double speed,
                         double running_cost, double rate) {
  GridProblem p;
  p.grid = grid;
  p.speed.assign(grid.size(), speed);
  p.running_cost.assign(grid.size(), running_cost);
  p.terminal_cost = std::move(terminal_cost);
  p.rate.assign(grid.size(), rate);
  return p;
}

double interpolate(const Grid2D& grid, const Field& field, double px, double py) {
  const double sx = std::clamp((px - grid.x0) / grid.h, 0.0, static_cast<double>(grid.nx - 1));
  const double sy = std::clamp((py - grid.y0) / grid.h, 0.0, static_cast<double>(grid.ny - 1));
  const auto i = std::min(static_cast<std::size_t>(sx), grid.nx - 2);
  const auto j = std::min(static_cast<std::size_t>(sy), grid.ny - 2);
  const double tx = sx - static_cast<double>(i);
  const double ty = sy - static_cast<double>(j);
  const std::array<std::size_t, 4> idx{grid.index(i, j), grid.index(i + 1, j),
                                       grid.index(i, j + 1), grid.index(i + 1, j + 1)};
  const std::array<double, 4> w{(1 - tx) * (1 - ty), tx * (1 - ty), (1 - tx) * ty, tx * ty};
  double sum = 0.0;
  double weight = 0.0;
  for (int c = 0; c < 4; ++c) {
    const double v = field[idx[c]];
    if (!std::isfinite(v) || w[c] == 0.0) continue;
    sum += w[c] * v;
    weight += w[c];
  }
  if (weight > 0.0) return sum / weight;
  // Only zero-weight corners are finite: fall back to the nearest one.
  const double v = field[grid.nearest(px, py)];
  return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
}

}  // namespace uhp
