#ifndef UHP_RANDOM_GRAPH_HPP_
#define UHP_RANDOM_GRAPH_HPP_

#include <cstdint>

#include "uhp/graph_problem.hpp"

namespace uhp {

/// Parameters for random instances satisfying the label-setting assumptions.
struct RandomGraphOptions {
  std::size_t nodes = 100;
  std::size_t max_out_degree = 8;  // kappa, self-loop included
  double min_cost = 0.1;           // Delta; 0 allowed
  double max_cost = 5.0;
  double max_terminal = 20.0;      // q drawn from [0, max_terminal]
  double min_termination = 0.05;
  double max_termination = 0.95;
  bool uniform_termination = false;  // one p for the whole instance
  std::uint64_t seed = 1;
};

/// Random directed graph with a zero-cost self-loop at every node and
/// 1..kappa-1 other successors per node. Deterministic for a given seed.
GraphProblem make_random_problem(const RandomGraphOptions& options);

}  // namespace uhp

#endif  // UHP_RANDOM_GRAPH_HPP_
