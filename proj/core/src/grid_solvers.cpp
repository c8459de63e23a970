#include "uhp/grid_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <utility>

namespace uhp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

PointData point_data(const GridProblem& problem, std::size_t idx) {
  return PointData{problem.running_cost[idx], problem.terminal_cost[idx], problem.speed[idx],
                   problem.rate[idx], problem.grid.h};
}

std::array<double, 4> neighbor_values(const Grid2D& grid, const Field& value, std::size_t idx) {
  const auto nb = neighbors(grid, idx);
  std::array<double, 4> out;
  for (int k = 0; k < 4; ++k) out[k] = nb[k] == kNoNeighbor ? kInf : value[nb[k]];
  return out;
}

std::vector<std::size_t> grid_local_minima(const GridProblem& problem) {
  std::vector<std::size_t> out;
  const auto& q = problem.terminal_cost;
  for (std::size_t idx = 0; idx < problem.grid.size(); ++idx) {
    if (problem.masked(idx)) continue;
    bool minimum = true;
    for (const auto n : neighbors(problem.grid, idx)) {
      if (n != kNoNeighbor && q[n] < q[idx]) {
        minimum = false;
        break;
      }
    }
    if (minimum) out.push_back(idx);
  }
  return out;
}

GridSolution fmm_solve(const GridProblem& problem, const FmmOptions& options) {
  problem.check();
  const Grid2D& grid = problem.grid;
  const std::size_t n = grid.size();

  GridSolution sol;
  sol.grid = grid;
  sol.value = problem.terminal_cost;
  sol.acceptance_rank.assign(n, kNeverAccepted);
  sol.acceptance_order.reserve(n);
  auto& v = sol.value;
  std::vector<char> accepted(n, 0);

  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  auto push = [&](std::size_t idx) {
    heap.emplace(v[idx], idx);
    ++sol.stats.heap_pushes;
  };

  if (options.seed_all) {
    for (std::size_t idx = 0; idx < n; ++idx) {
      if (!problem.masked(idx)) push(idx);
    }
  } else {
    for (const auto idx : grid_local_minima(problem)) push(idx);
  }

  while (!heap.empty()) {
    const auto [val, cur] = heap.top();
    heap.pop();
    ++sol.stats.heap_pops;
    if (accepted[cur] || val != v[cur]) continue;
    accepted[cur] = 1;
    sol.acceptance_rank[cur] = sol.acceptance_order.size();
    sol.acceptance_order.push_back(cur);

    const auto nb = neighbors(grid, cur);
    for (int k = 0; k < 4; ++k) {
      const std::size_t t = nb[k];
      if (t == kNoNeighbor || accepted[t] || problem.masked(t)) continue;
      // cur is neighbor (k + 2) % 4 of t; its perpendicular neighbors are
      // (k + 1) % 4 and (k + 3) % 4.
      const auto tn = neighbors(grid, t);
      double perp = kInf;
      for (const int side : {(k + 1) % 4, (k + 3) % 4}) {
        const std::size_t s = tn[side];
        if (s != kNoNeighbor && accepted[s]) perp = std::min(perp, v[s]);
      }
      const PointData pd = point_data(problem, t);
      const double cand = perp == kInf ? one_sided_update(v[cur], pd)
                                       : quadrant_update(v[cur], perp, pd);
      if (cand < v[t]) {
        v[t] = cand;
        ++sol.stats.value_updates;
      }
      push(t);
    }
  }
  return sol;
}

GridSolution sweep_oracle(const GridProblem& problem, const SweepOptions& options) {
  problem.check();
  const Grid2D& grid = problem.grid;
  GridSolution sol;
  sol.grid = grid;
  sol.value = problem.terminal_cost;
  sol.acceptance_rank.assign(grid.size(), kNeverAccepted);
  auto& v = sol.value;
  sol.stats.converged = false;

  auto relax = [&](std::size_t i, std::size_t j, double& change) {
    const std::size_t idx = grid.index(i, j);
    if (problem.masked(idx)) return;
    const double nv = node_update(neighbor_values(grid, v, idx), point_data(problem, idx));
    if (nv != v[idx]) {
      change = std::max(change, std::abs(nv - v[idx]));
      v[idx] = nv;
      ++sol.stats.value_updates;
    }
  };

  const std::size_t nx = grid.nx;
  const std::size_t ny = grid.ny;
  while (sol.stats.sweeps < options.max_sweeps) {
    const int dir = static_cast<int>(sol.stats.sweeps % 4);
    const bool rev_i = dir == 1 || dir == 2;
    const bool rev_j = dir >= 2;
    double change = 0.0;
    for (std::size_t jj = 0; jj < ny; ++jj) {
      const std::size_t j = rev_j ? ny - 1 - jj : jj;
      for (std::size_t ii = 0; ii < nx; ++ii) relax(rev_i ? nx - 1 - ii : ii, j, change);
    }
    ++sol.stats.sweeps;
    sol.stats.last_change = change;
    if (change <= options.tolerance) {
      sol.stats.converged = true;
      break;
    }
  }
  return sol;
}

double max_residual(const GridProblem& problem, const Field& value) {
  double worst = 0.0;
  for (std::size_t idx = 0; idx < problem.grid.size(); ++idx) {
    if (problem.masked(idx)) continue;
    worst = std::max(worst, update_residual(value[idx], neighbor_values(problem.grid, value, idx),
                                            point_data(problem, idx)));
  }
  return worst;
}

double default_motionless_eps(const GridProblem& problem) {
  double scale = 1.0;
  for (std::size_t idx = 0; idx < problem.grid.size(); ++idx) {
    if (!problem.masked(idx)) scale = std::max(scale, std::abs(problem.terminal_cost[idx]));
  }
  return 1e-9 * scale;
}

MotionlessSet motionless_set(const GridSolution& solution, const GridProblem& problem,
                             std::optional<double> eps) {
  MotionlessSet m;
  m.eps = eps ? *eps : default_motionless_eps(problem);
  const std::size_t n = problem.grid.size();
  m.mask.assign(n, 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    if (problem.masked(idx)) continue;
    m.mask[idx] = problem.terminal_cost[idx] - solution.value[idx] <= m.eps ? 1 : 0;
  }
  for (std::size_t idx = 0; idx < n; ++idx) {
    if (!m.mask[idx]) continue;
    for (const auto nb : neighbors(problem.grid, idx)) {
      if (nb != kNoNeighbor && !problem.masked(nb) && !m.mask[nb]) {
        m.boundary.push_back(idx);
        break;
      }
    }
  }
  return m;
}

}  // namespace uhp
