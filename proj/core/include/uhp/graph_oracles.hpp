#ifndef UHP_GRAPH_ORACLES_HPP_
#define UHP_GRAPH_ORACLES_HPP_

#include <span>
#include <vector>

#include "uhp/graph_problem.hpp"

// Reference dynamic-programming recursions for the classical problem types
// (finite horizon, exit time, discounted infinite horizon, optimal
// stopping). They are plain value iterations used to cross-check the
// randomly-terminated solvers and conversions.

namespace uhp {

/// U^t = q, U^k_i = min_j { K_ij + U^{k+1}_j }; returns U^0 for `steps` transitions.
std::vector<double> finite_horizon_values(const GraphProblem& problem, std::size_t steps);

/// Shortest cost to the exit set: U_i = q_i on exits, min_j { K_ij + U_j } elsewhere.
/// Bellman-Ford rounds; requires non-negative costs.
std::vector<double> exit_time_values(const GraphProblem& problem, std::span<const NodeId> exits);

/// U_i = min_j { K~_ij + alpha U_j }, iterated to `tolerance` in sup-norm.
std::vector<double> infinite_horizon_values(const DiscountedProblem& problem,
                                            double tolerance = 1e-14);

/// U_i = min(stop_i, min_{j != i} { K~_ij + alpha U_j }); alpha may be 1 for
/// non-negative costs.
std::vector<double> optimal_stopping_values(const DiscountedProblem& problem,
                                            std::span<const double> stop_cost,
                                            double tolerance = 1e-14);

}  // namespace uhp

#endif  // UHP_GRAPH_ORACLES_HPP_
