#ifndef UHP_TRAJECTORY_HPP_
#define UHP_TRAJECTORY_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "uhp/grid.hpp"

namespace uhp {

enum class TraceStatus {
  Motionless,  // the nearest gridpoint of the last point is motionless
  Snapped,     // finished with a straight segment to the free boundary
  MaxSteps,    // step budget exhausted; the path is partial
  Stalled,     // vanishing gradient away from the motionless set
};

std::string_view trace_status_name(TraceStatus s);

struct TrajectoryPoint {
  double x;
  double y;
  double value;  // interpolated V
};

struct TrajectoryPath {
  std::vector<TrajectoryPoint> points;
  TraceStatus status = TraceStatus::Motionless;
  bool ok() const { return status == TraceStatus::Motionless || status == TraceStatus::Snapped; }
};

struct TraceOptions {
  double step = 0.0;                 // arclength per step; 0 or anything above h/2 means h/2
  double snap_cells = 3.0;           // snap distance in grid cells
  std::optional<double> eps;         // motionless tolerance, default_motionless_eps if unset
  std::size_t max_steps = 0;         // 0 means 10 (nx + ny)
};

/// Gradient descent on V from (x, y): steps along -grad V (central
/// differences at gridpoints, one-sided next to masked points or the grid
/// edge, bilinear in between). Stops on reaching the motionless set, or
/// once within snap distance of its free boundary, in which case a straight
/// segment to the nearest free-boundary point is appended. Throws
/// std::invalid_argument if the start is off the grid or masked.
TrajectoryPath trace(const GridSolution& solution, const GridProblem& problem, double x, double y,
                     const TraceOptions& options = {});

}  // namespace uhp

#endif  // UHP_TRAJECTORY_HPP_
