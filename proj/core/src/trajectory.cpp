#include "uhp/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "uhp/grid_solvers.hpp"

namespace uhp {

namespace {

struct Gradient {
  Field gx;
  Field gy;
};

double axis_derivative(double lo, double mid, double hi, double h) {
  const bool has_lo = std::isfinite(lo);
  const bool has_hi = std::isfinite(hi);
  if (has_lo && has_hi) return (hi - lo) / (2.0 * h);
  if (has_hi) return (hi - mid) / h;
  if (has_lo) return (mid - lo) / h;
  return 0.0;
}

Gradient nodal_gradient(const Grid2D& grid, const Field& v) {
  Gradient g{Field(grid.size(), 0.0), Field(grid.size(), 0.0)};
  constexpr double kInf = std::numeric_limits<double>::infinity();
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    if (!std::isfinite(v[idx])) continue;
    const auto nb = neighbors(grid, idx);
    auto at = [&](std::size_t k) { return k == kNoNeighbor ? kInf : v[k]; };
    g.gx[idx] = axis_derivative(at(nb[2]), v[idx], at(nb[0]), grid.h);
    g.gy[idx] = axis_derivative(at(nb[3]), v[idx], at(nb[1]), grid.h);
  }
  return g;
}

}  // namespace

std::string_view trace_status_name(TraceStatus s) {
  switch (s) {
    case TraceStatus::Motionless: return "motionless";
    case TraceStatus::Snapped: return "snapped";
    case TraceStatus::MaxSteps: return "max_steps";
    case TraceStatus::Stalled: return "stalled";
  }
  return "unknown";
}

TrajectoryPath trace(const GridSolution& solution, const GridProblem& problem, double x, double y,
                     const TraceOptions& options) {
  const Grid2D& grid = problem.grid;
  if (!grid.contains(x, y)) throw std::invalid_argument("trajectory start is off the grid");
  if (problem.masked(grid.nearest(x, y))) {
    throw std::invalid_argument("trajectory start lies outside the domain");
  }

  const MotionlessSet m = motionless_set(solution, problem, options.eps);
  const Gradient g = nodal_gradient(grid, solution.value);
  const double h = grid.h;
  const double step = options.step > 0.0 ? std::min(options.step, 0.5 * h) : 0.5 * h;
  const double snap = options.snap_cells * h;
  const std::size_t max_steps = options.max_steps > 0 ? options.max_steps : 10 * (grid.nx + grid.ny);

  TrajectoryPath path;
  auto add = [&](double px, double py) {
    path.points.push_back({px, py, interpolate(grid, solution.value, px, py)});
  };
  add(x, y);

  for (std::size_t it = 0;; ++it) {
    if (m.mask[grid.nearest(x, y)]) {
      path.status = TraceStatus::Motionless;
      return path;
    }
    double best = std::numeric_limits<double>::infinity();
    std::size_t target = kNoNeighbor;
    for (const auto b : m.boundary) {
      const double d = std::hypot(grid.x(grid.col(b)) - x, grid.y(grid.row(b)) - y);
      if (d < best) {
        best = d;
        target = b;
      }
    }
    if (target != kNoNeighbor && best <= snap) {
      add(grid.x(grid.col(target)), grid.y(grid.row(target)));
      path.status = TraceStatus::Snapped;
      return path;
    }
    if (it == max_steps) {
      path.status = TraceStatus::MaxSteps;
      return path;
    }
    const double dx = interpolate(grid, g.gx, x, y);
    const double dy = interpolate(grid, g.gy, x, y);
    const double norm = std::hypot(dx, dy);
    if (!(norm > 1e-14)) {
      path.status = TraceStatus::Stalled;
      return path;
    }
    x = std::clamp(x - step * dx / norm, grid.x0, grid.x_max());
    y = std::clamp(y - step * dy / norm, grid.y0, grid.y_max());
    add(x, y);
  }
}

}  // namespace uhp
