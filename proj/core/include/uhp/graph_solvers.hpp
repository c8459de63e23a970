#ifndef UHP_GRAPH_SOLVERS_HPP_
#define UHP_GRAPH_SOLVERS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "uhp/graph_problem.hpp"

namespace uhp {

/// Thrown by the label-setting solvers when the problem breaks an
/// assumption they depend on. `violations` carries the validate() report.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(const std::string& what, std::vector<Violation> violations)
      : std::invalid_argument(what), violations(std::move(violations)) {}
  std::vector<Violation> violations;
};

struct SolverStats {
  std::size_t heap_pushes = 0;
  std::size_t heap_pops = 0;
  std::size_t value_updates = 0;
  std::size_t iterations = 0;  // value iteration sweeps
  bool converged = true;
  double last_change = 0.0;  // value iteration: sup-norm of the final sweep
};

struct GraphSolution {
  std::vector<double> value;
  std::vector<NodeId> policy;            // successor; i itself for motionless nodes
  std::vector<char> motionless;          // 1 where V_i == q_i within tolerance
  std::vector<NodeId> acceptance_order;  // label-setting only
  SolverStats stats;
};

/// |V - q| <= 1e-12 * max(1, |q|).
bool is_motionless_value(double value, double terminal_cost);

/// Fills policy and motionless flags from `value` (greedy argmin of the
/// optimality equation, ties to the lowest successor index).
void derive_policy(const GraphProblem& problem, GraphSolution& solution);

enum class SweepOrder { Jacobi, GaussSeidel };

struct ValueIterationOptions {
  double tolerance = 1e-13;
  std::size_t max_iterations = 1'000'000;
  SweepOrder order = SweepOrder::Jacobi;
};

/// Iterates W <- T W with (T W)_i = min_j { K_ij + p_ij q_j + (1 - p_ij) W_j }
/// from `initial` (terminal costs when empty) until the sup-norm change
/// drops to `tolerance`. On failure the last iterate is returned with
/// stats.converged == false. Works without the label-setting assumptions.
GraphSolution value_iteration(const GraphProblem& problem,
                              std::span<const double> initial = {},
                              const ValueIterationOptions& options = {});

struct LabelSettingOptions {
  /// Seed every node as Considered instead of only the local minima of q.
  bool seed_all = false;
};

/// Dijkstra-like label setting: V := q, Considered := local minima of q,
/// accept the smallest, relax predecessors with
/// V_i := min(V_i, K_ij + p_ij q_j + (1 - p_ij) V_j).
/// Heap ties go to the lowest node index. Throws ValidationError.
GraphSolution dijkstra_solve(const GraphProblem& problem,
                             const LabelSettingOptions& options = {});

/// Dial-like variant with buckets of width Delta. Requires Delta > 0.
GraphSolution dial_solve(const GraphProblem& problem,
                         const LabelSettingOptions& options = {});

/// Local minima of q: q_i <= q_j for every successor j.
std::vector<NodeId> local_minima(const GraphProblem& problem);

/// Undiscounted optimal stopping limit (termination probability -> 0):
/// V0_i = min(q_i, min_{j != i} K_ij + V0_j).
std::vector<double> solve_v0(const GraphProblem& problem);

/// Single-step lookahead limit (termination probability -> 1):
/// V1_i = min_j K_ij + q_j.
std::vector<double> solve_v1(const GraphProblem& problem);

/// For a node whose self-transition is the unique V1 minimizer returns
/// q_i / min_{j != i} (K_ij + q_j); the node is motionless for any uniform
/// termination probability at least this large. nullopt otherwise. This is
/// a diagnostic bound only.
std::optional<double> motionless_probability_bound(const GraphProblem& problem, NodeId i);

/// Follows the policy from `start` to its motionless node. The returned
/// sequence ends at the first node whose successor is itself; the implied
/// infinite path repeats that node. Throws std::runtime_error if a cycle
/// is found before reaching a motionless node.
std::vector<NodeId> extract_path(const GraphSolution& solution, NodeId start);

/// Expected cost of the eventually-motionless path (path..., back, back, ...),
/// using the product of per-transition survival probabilities. Exact (no
/// truncation). Throws std::invalid_argument on a missing transition.
double path_cost(const GraphProblem& problem, std::span<const NodeId> path);

/// Residual max_i |V_i - (T V)_i|.
double bellman_residual(const GraphProblem& problem, std::span<const double> value);

}  // namespace uhp

#endif  // UHP_GRAPH_SOLVERS_HPP_
