#ifndef UHP_GRAPH_PROBLEM_HPP_
#define UHP_GRAPH_PROBLEM_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace uhp {

using NodeId = std::size_t;

/// One directed transition as supplied by the caller.
struct EdgeSpec {
  NodeId from = 0;
  NodeId to = 0;
  double cost = 0.0;         // K_ij
  double termination = 0.5;  // p_ij, probability the process stops after this transition
};

struct OutEdge {
  NodeId target;
  double cost;
  double termination;
};

struct InEdge {
  NodeId source;
  double cost;
  double termination;
};

/// A randomly-terminated control problem on a finite directed graph.
///
/// Holds terminal costs q_i and the transition list (K_ij, p_ij) in
/// compressed row form, both forward and reversed. The class does not
/// enforce the self-transition / zero-self-cost / cost-lower-bound
/// assumptions; `validate` reports them so that problems violating them
/// can still be built and handed to value iteration.
class GraphProblem {
 public:
  GraphProblem() = default;

  /// Throws std::invalid_argument on out-of-range endpoints, duplicate
  /// (from, to) pairs, or non-finite costs.
  GraphProblem(std::vector<double> terminal_cost, std::vector<EdgeSpec> edges);

  std::size_t node_count() const { return terminal_cost_.size(); }
  std::size_t edge_count() const { return out_.size(); }

  double terminal_cost(NodeId i) const { return terminal_cost_[i]; }
  std::span<const double> terminal_costs() const { return terminal_cost_; }

  std::span<const OutEdge> out_edges(NodeId i) const {
    return {out_.data() + out_offset_[i], out_.data() + out_offset_[i + 1]};
  }
  std::span<const InEdge> in_edges(NodeId j) const {
    return {in_.data() + in_offset_[j], in_.data() + in_offset_[j + 1]};
  }

  /// The self-transition of node i, if present.
  std::optional<OutEdge> self_edge(NodeId i) const;

  /// Delta: smallest cost over non-self transitions, +inf when there are none.
  double min_transition_cost() const { return min_transition_cost_; }

  /// Largest out-degree (kappa).
  std::size_t max_out_degree() const;

  /// The common termination probability if every transition uses the same one.
  std::optional<double> uniform_termination() const;

  /// Edges back in EdgeSpec form, ordered by (from, to).
  std::vector<EdgeSpec> edge_list() const;

 private:
  std::vector<double> terminal_cost_;
  std::vector<std::size_t> out_offset_{0};
  std::vector<OutEdge> out_;
  std::vector<std::size_t> in_offset_{0};
  std::vector<InEdge> in_;
  double min_transition_cost_ = 0.0;
};

enum class Assumption {
  SelfTransition,  // every node can stay in place
  ZeroSelfCost,    // staying in place is free
  CostLowerBound,  // K_ij >= Delta >= 0 for j != i
  Probability,     // p_ij in (0, 1)
  TerminalCost,    // q_i finite
};

struct Violation {
  Assumption kind;
  NodeId node;
  std::optional<NodeId> target;
  std::string message;
};

/// Report-style check of the assumptions label-setting relies on. Empty
/// result iff every node has a zero-cost self-transition, every other
/// transition cost is non-negative, every probability lies in (0, 1) and
/// every terminal cost is finite.
std::vector<Violation> validate(const GraphProblem& problem);

/// Moves self-transition costs into the terminal cost:
/// q_i' = q_i + K_ii / p, K_ij' = K_ij - K_jj, K_ii' = 0.
/// Requires a self-transition at every node and a single termination
/// probability shared by all transitions. Throws std::domain_error when
/// some K_ij < K_jj (the result would have a negative transition cost).
GraphProblem normalize_self_costs(const GraphProblem& problem);

/// A discounted infinite-horizon problem: minimize sum alpha^k K~(y_k, y_k+1).
struct DiscountedProblem {
  std::size_t node_count = 0;
  std::vector<EdgeSpec> edges;  // termination field unused
  double discount = 0.5;        // alpha in (0, 1)
};

/// Restates a discounted problem as a randomly-terminated one:
/// p = 1 - alpha, q_i = K~_ii / p, K_ij = K~_ij - p q_j, K_ii = 0.
/// Throws std::invalid_argument if a node lacks a self-transition and
/// std::domain_error if some resulting K_ij is negative.
GraphProblem from_infinite_horizon(const DiscountedProblem& discounted);

/// Inverse of from_infinite_horizon: K~_ij = K_ij + p q_j, alpha = 1 - p.
/// Requires a uniform termination probability.
DiscountedProblem to_infinite_horizon(const GraphProblem& problem);

}  // namespace uhp

#endif  // UHP_GRAPH_PROBLEM_HPP_
