#ifndef UHP_GRID_SOLVERS_HPP_
#define UHP_GRID_SOLVERS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "uhp/grid.hpp"
#include "uhp/local_update.hpp"

namespace uhp {

/// Local data of point idx for the update formulas.
PointData point_data(const GridProblem& problem, std::size_t idx);

/// Current neighbor values of idx (east, north, west, south), +inf where
/// missing.
std::array<double, 4> neighbor_values(const Grid2D& grid, const Field& value, std::size_t idx);

/// Unmasked points whose q is <= q at every unmasked 4-neighbor.
std::vector<std::size_t> grid_local_minima(const GridProblem& problem);

struct FmmOptions {
  /// Seed every unmasked point instead of the local minima of q.
  bool seed_all = false;
};

/// Modified Fast Marching: V := q, seeds are the local minima of q, the
/// smallest Considered value is accepted and its non-accepted neighbors are
/// updated through the single quadrant that contains it. Heap ties go to
/// the lower row-major index. Throws std::invalid_argument on invalid input.
GridSolution fmm_solve(const GridProblem& problem, const FmmOptions& options = {});

struct SweepOptions {
  double tolerance = 1e-13;
  std::size_t max_sweeps = 100'000;
};

/// Gauss-Seidel iteration of node_update in the four alternating orderings,
/// starting from V = q, until a full sweep changes no value by more than
/// the tolerance. stats.converged is false on failure.
GridSolution sweep_oracle(const GridProblem& problem, const SweepOptions& options = {});

/// Largest update_residual over unmasked points.
double max_residual(const GridProblem& problem, const Field& value);

/// 1e-9 max(1, max |q|) over unmasked points. The solvers leave V bitwise
/// equal to q wherever staying put wins, so only rounding needs absorbing.
double default_motionless_eps(const GridProblem& problem);

/// Points with q - V <= eps (default_motionless_eps when nullopt).
MotionlessSet motionless_set(const GridSolution& solution, const GridProblem& problem,
                             std::optional<double> eps = std::nullopt);

}  // namespace uhp

#endif  // UHP_GRID_SOLVERS_HPP_
