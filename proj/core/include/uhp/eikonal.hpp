#ifndef UHP_EIKONAL_HPP_
#define UHP_EIKONAL_HPP_

#include <cstddef>
#include <vector>

#include "uhp/grid.hpp"

namespace uhp {

/// Minimal travel time to `source` for |grad u| f = 1, by standard Fast
/// Marching with the Rouy-Tourin upwind update. Points where `blocked` is
/// nonzero are outside the domain; unreachable points get +inf.
Field eikonal_solve(const Grid2D& grid, const Field& speed, std::size_t source,
                    const std::vector<char>& blocked = {});

struct CallPoint {
  double x;
  double y;
  double probability;
};

/// Throws std::invalid_argument unless the probabilities are non-negative,
/// sum to 1 within 1e-12 and every location lies on the grid.
void check_calls(const Grid2D& grid, const std::vector<CallPoint>& calls);

/// q(x) = sum P_i u_i(x) with each location snapped to its nearest gridpoint.
Field response_cost(const Grid2D& grid, const Field& speed, const std::vector<CallPoint>& calls,
                    const std::vector<char>& blocked = {});

}  // namespace uhp

#endif  // UHP_EIKONAL_HPP_
