#include "uhp/graph_problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace uhp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string node_name(NodeId i) { return "node " + std::to_string(i); }

}  // namespace

GraphProblem::GraphProblem(std::vector<double> terminal_cost,
                           std::vector<EdgeSpec> edges)
    : terminal_cost_(std::move(terminal_cost)) {
  const std::size_t m = terminal_cost_.size();
  for (const auto& e : edges) {
    if (e.from >= m || e.to >= m) {
      std::ostringstream ss;
      ss << "edge " << e.from << " -> " << e.to << " references a node outside [0, "
         << m << ")";
      throw std::invalid_argument(ss.str());
    }
    if (!std::isfinite(e.cost) || !std::isfinite(e.termination)) {
      std::ostringstream ss;
      ss << "edge " << e.from << " -> " << e.to << " has a non-finite cost or probability";
      throw std::invalid_argument(ss.str());
    }
  }
  std::sort(edges.begin(), edges.end(), [](const EdgeSpec& a, const EdgeSpec& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  for (std::size_t k = 1; k < edges.size(); ++k) {
    if (edges[k].from == edges[k - 1].from && edges[k].to == edges[k - 1].to) {
      std::ostringstream ss;
      ss << "duplicate edge " << edges[k].from << " -> " << edges[k].to;
      throw std::invalid_argument(ss.str());
    }
  }

  out_offset_.assign(m + 1, 0);
  in_offset_.assign(m + 1, 0);
  for (const auto& e : edges) {
    ++out_offset_[e.from + 1];
    ++in_offset_[e.to + 1];
  }
  for (std::size_t i = 0; i < m; ++i) {
    out_offset_[i + 1] += out_offset_[i];
    in_offset_[i + 1] += in_offset_[i];
  }
  out_.resize(edges.size());
  in_.resize(edges.size());
  std::vector<std::size_t> out_fill(out_offset_.begin(), out_offset_.end() - 1);
  std::vector<std::size_t> in_fill(in_offset_.begin(), in_offset_.end() - 1);
  min_transition_cost_ = kInf;
  // Sorted input keeps in-edges ordered by source as well.
  for (const auto& e : edges) {
    out_[out_fill[e.from]++] = OutEdge{e.to, e.cost, e.termination};
    in_[in_fill[e.to]++] = InEdge{e.from, e.cost, e.termination};
    if (e.from != e.to) min_transition_cost_ = std::min(min_transition_cost_, e.cost);
  }
}

std::optional<OutEdge> GraphProblem::self_edge(NodeId i) const {
  for (const auto& e : out_edges(i)) {
    if (e.target == i) return e;
  }
  return std::nullopt;
}

std::size_t GraphProblem::max_out_degree() const {
  std::size_t kappa = 0;
  for (std::size_t i = 0; i < node_count(); ++i) {
    kappa = std::max(kappa, out_offset_[i + 1] - out_offset_[i]);
  }
  return kappa;
}

std::optional<double> GraphProblem::uniform_termination() const {
  if (out_.empty()) return std::nullopt;
  const double p = out_.front().termination;
  for (const auto& e : out_) {
    if (e.termination != p) return std::nullopt;
  }
  return p;
}

std::vector<EdgeSpec> GraphProblem::edge_list() const {
  std::vector<EdgeSpec> edges;
  edges.reserve(out_.size());
  for (NodeId i = 0; i < node_count(); ++i) {
    for (const auto& e : out_edges(i)) {
      edges.push_back(EdgeSpec{i, e.target, e.cost, e.termination});
    }
  }
  return edges;
}

std::vector<Violation> validate(const GraphProblem& problem) {
  std::vector<Violation> out;
  for (NodeId i = 0; i < problem.node_count(); ++i) {
    if (!std::isfinite(problem.terminal_cost(i))) {
      out.push_back({Assumption::TerminalCost, i, std::nullopt,
                     "terminal cost not finite at " + node_name(i)});
    }
    bool has_self = false;
    for (const auto& e : problem.out_edges(i)) {
      if (e.target == i) {
        has_self = true;
        if (e.cost != 0.0) {
          std::ostringstream ss;
          ss << "A2 nonzero self-cost " << e.cost << " at " << node_name(i);
          out.push_back({Assumption::ZeroSelfCost, i, i, ss.str()});
        }
      } else if (!(e.cost >= 0.0)) {
        std::ostringstream ss;
        ss << "A3 negative transition cost " << e.cost << " on " << i << " -> " << e.target;
        out.push_back({Assumption::CostLowerBound, i, e.target, ss.str()});
      }
      if (!(e.termination > 0.0 && e.termination < 1.0)) {
        std::ostringstream ss;
        ss << "termination probability " << e.termination << " outside (0,1) on " << i
           << " -> " << e.target;
        out.push_back({Assumption::Probability, i, e.target, ss.str()});
      }
    }
    if (!has_self) {
      out.push_back({Assumption::SelfTransition, i, std::nullopt,
                     "A1 missing self-transition at " + node_name(i)});
    }
  }
  return out;
}

GraphProblem normalize_self_costs(const GraphProblem& problem) {
  const auto p = problem.uniform_termination();
  if (!p) {
    throw std::invalid_argument(
        "normalize_self_costs requires one termination probability shared by all edges");
  }
  const std::size_t m = problem.node_count();
  std::vector<double> self_cost(m, 0.0);
  for (NodeId i = 0; i < m; ++i) {
    const auto self = problem.self_edge(i);
    if (!self) throw std::invalid_argument("A1 missing self-transition at " + node_name(i));
    self_cost[i] = self->cost;
  }

  std::vector<double> q(m);
  for (NodeId i = 0; i < m; ++i) q[i] = problem.terminal_cost(i) + self_cost[i] / *p;

  std::vector<EdgeSpec> edges = problem.edge_list();
  for (auto& e : edges) {
    if (e.from == e.to) {
      e.cost = 0.0;
      continue;
    }
    const double shifted = e.cost - self_cost[e.to];
    if (shifted < 0.0) {
      std::ostringstream ss;
      ss << "edge " << e.from << " -> " << e.to << ": K_ij - K_jj = " << shifted
         << " < 0, cost lower bound cannot be restored";
      throw std::domain_error(ss.str());
    }
    e.cost = shifted;
  }
  return GraphProblem(std::move(q), std::move(edges));
}

GraphProblem from_infinite_horizon(const DiscountedProblem& discounted) {
  const double alpha = discounted.discount;
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("discount factor must lie in (0, 1)");
  }
  const double p = 1.0 - alpha;
  const std::size_t m = discounted.node_count;

  std::vector<double> q(m, kInf);
  for (const auto& e : discounted.edges) {
    if (e.from >= m || e.to >= m) throw std::invalid_argument("edge endpoint out of range");
    if (e.from == e.to) q[e.from] = e.cost / p;
  }
  for (NodeId i = 0; i < m; ++i) {
    if (std::isinf(q[i])) throw std::invalid_argument("A1 missing self-transition at " + node_name(i));
  }

  std::vector<EdgeSpec> edges;
  edges.reserve(discounted.edges.size());
  for (const auto& e : discounted.edges) {
    EdgeSpec out{e.from, e.to, 0.0, p};
    if (e.from != e.to) {
      out.cost = e.cost - p * q[e.to];
      if (out.cost < 0.0) {
        std::ostringstream ss;
        ss << "edge " << e.from << " -> " << e.to << ": K~_ij - p q_j = " << out.cost
           << " < 0";
        throw std::domain_error(ss.str());
      }
    }
    edges.push_back(out);
  }
  return GraphProblem(std::move(q), std::move(edges));
}

DiscountedProblem to_infinite_horizon(const GraphProblem& problem) {
  const auto p = problem.uniform_termination();
  if (!p) {
    throw std::invalid_argument(
        "to_infinite_horizon requires one termination probability shared by all edges");
  }
  DiscountedProblem out;
  out.node_count = problem.node_count();
  out.discount = 1.0 - *p;
  out.edges = problem.edge_list();
  for (auto& e : out.edges) e.cost += *p * problem.terminal_cost(e.to);
  return out;
}

}  // namespace uhp
