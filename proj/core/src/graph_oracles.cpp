#include "uhp/graph_oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace uhp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxSweeps = 10'000'000;
}  // namespace

std::vector<double> finite_horizon_values(const GraphProblem& problem, std::size_t steps) {
  const auto q = problem.terminal_costs();
  std::vector<double> u(q.begin(), q.end());
  std::vector<double> prev(u.size());
  for (std::size_t k = 0; k < steps; ++k) {
    prev.swap(u);
    for (NodeId i = 0; i < u.size(); ++i) {
      double best = kInf;
      for (const auto& e : problem.out_edges(i)) best = std::min(best, e.cost + prev[e.target]);
      u[i] = best;
    }
  }
  return u;
}

std::vector<double> exit_time_values(const GraphProblem& problem, std::span<const NodeId> exits) {
  const std::size_t m = problem.node_count();
  std::vector<char> is_exit(m, 0);
  for (NodeId x : exits) is_exit.at(x) = 1;
  std::vector<double> u(m, kInf);
  for (NodeId x : exits) u[x] = problem.terminal_cost(x);
  for (std::size_t round = 0; round < m; ++round) {
    bool changed = false;
    for (NodeId i = 0; i < m; ++i) {
      if (is_exit[i]) continue;
      for (const auto& e : problem.out_edges(i)) {
        if (e.target == i) continue;
        const double cand = e.cost + u[e.target];
        if (cand < u[i]) {
          u[i] = cand;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return u;
}

std::vector<double> infinite_horizon_values(const DiscountedProblem& problem, double tolerance) {
  if (!(problem.discount > 0.0 && problem.discount < 1.0)) {
    throw std::invalid_argument("infinite horizon needs a discount in (0, 1)");
  }
  std::vector<double> u(problem.node_count, 0.0);
  std::vector<double> next(problem.node_count);
  for (std::size_t sweep = 0; sweep < kMaxSweeps; ++sweep) {
    std::fill(next.begin(), next.end(), kInf);
    for (const auto& e : problem.edges) {
      next[e.from] = std::min(next[e.from], e.cost + problem.discount * u[e.to]);
    }
    double change = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) change = std::max(change, std::abs(next[i] - u[i]));
    u.swap(next);
    if (change <= tolerance) return u;
  }
  throw std::runtime_error("infinite_horizon_values did not converge");
}

std::vector<double> optimal_stopping_values(const DiscountedProblem& problem,
                                            std::span<const double> stop_cost,
                                            double tolerance) {
  if (stop_cost.size() != problem.node_count) {
    throw std::invalid_argument("stop cost has the wrong size");
  }
  std::vector<double> u(stop_cost.begin(), stop_cost.end());
  std::vector<double> next(u.size());
  for (std::size_t sweep = 0; sweep < kMaxSweeps; ++sweep) {
    next.assign(stop_cost.begin(), stop_cost.end());
    for (const auto& e : problem.edges) {
      if (e.from == e.to) continue;
      next[e.from] = std::min(next[e.from], e.cost + problem.discount * u[e.to]);
    }
    double change = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) change = std::max(change, std::abs(next[i] - u[i]));
    u.swap(next);
    if (change <= tolerance) return u;
  }
  throw std::runtime_error("optimal_stopping_values did not converge");
}

}  // namespace uhp
