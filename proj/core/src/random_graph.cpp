#include "uhp/random_graph.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace uhp {

GraphProblem make_random_problem(const RandomGraphOptions& options) {
  if (options.nodes == 0) throw std::invalid_argument("random graph needs at least one node");
  if (options.max_out_degree < 1) throw std::invalid_argument("max_out_degree must be >= 1");
  if (!(options.min_cost >= 0.0 && options.max_cost >= options.min_cost)) {
    throw std::invalid_argument("need 0 <= min_cost <= max_cost");
  }
  if (!(options.min_termination > 0.0 && options.max_termination < 1.0 &&
        options.min_termination <= options.max_termination)) {
    throw std::invalid_argument("termination range must lie inside (0, 1)");
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> cost(options.min_cost, options.max_cost);
  std::uniform_real_distribution<double> terminal(0.0, options.max_terminal);
  std::uniform_real_distribution<double> prob(options.min_termination, options.max_termination);

  const std::size_t m = options.nodes;
  std::vector<double> q(m);
  for (auto& v : q) v = terminal(rng);

  const double shared_p = prob(rng);
  auto draw_p = [&] { return options.uniform_termination ? shared_p : prob(rng); };

  std::vector<EdgeSpec> edges;
  const std::size_t max_others = std::min(options.max_out_degree - 1, m - 1);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  for (NodeId i = 0; i < m; ++i) {
    edges.push_back(EdgeSpec{i, i, 0.0, draw_p()});
    if (max_others == 0) continue;
    std::uniform_int_distribution<std::size_t> degree(1, max_others);
    const std::size_t d = degree(rng);
    std::vector<NodeId> targets;
    while (targets.size() < d) {
      const NodeId j = pick(rng);
      if (j == i || std::find(targets.begin(), targets.end(), j) != targets.end()) continue;
      targets.push_back(j);
    }
    for (NodeId j : targets) edges.push_back(EdgeSpec{i, j, cost(rng), draw_p()});
  }
  return GraphProblem(std::move(q), std::move(edges));
}

}  // namespace uhp
