#include "uhp/graph_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>
#include <utility>

namespace uhp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Label : unsigned char { Far, Considered, Accepted };

using HeapEntry = std::pair<double, NodeId>;
using MinHeap = std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>>;

inline double relax(double cost, double p, double q_j, double v_j) {
  return cost + p * q_j + (1.0 - p) * v_j;
}

void require_valid(const GraphProblem& problem) {
  auto violations = validate(problem);
  if (!violations.empty()) {
    std::ostringstream ss;
    ss << "problem violates label-setting assumptions (" << violations.size()
       << " violation(s)); first: " << violations.front().message;
    throw ValidationError(ss.str(), std::move(violations));
  }
}

std::vector<NodeId> initial_considered(const GraphProblem& problem,
                                       const LabelSettingOptions& options) {
  if (!options.seed_all) return local_minima(problem);
  std::vector<NodeId> all(problem.node_count());
  for (NodeId i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

}  // namespace

bool is_motionless_value(double value, double terminal_cost) {
  return std::abs(value - terminal_cost) <= 1e-12 * std::max(1.0, std::abs(terminal_cost));
}

void derive_policy(const GraphProblem& problem, GraphSolution& solution) {
  const std::size_t m = problem.node_count();
  solution.policy.assign(m, 0);
  solution.motionless.assign(m, 0);
  const auto q = problem.terminal_costs();
  for (NodeId i = 0; i < m; ++i) {
    solution.policy[i] = i;
    if (is_motionless_value(solution.value[i], q[i])) {
      solution.motionless[i] = 1;
      continue;
    }
    double best = kInf;
    for (const auto& e : problem.out_edges(i)) {
      if (e.target == i) continue;
      const double cand = relax(e.cost, e.termination, q[e.target], solution.value[e.target]);
      if (cand < best) {
        best = cand;
        solution.policy[i] = e.target;
      }
    }
  }
}

GraphSolution value_iteration(const GraphProblem& problem, std::span<const double> initial,
                              const ValueIterationOptions& options) {
  const std::size_t m = problem.node_count();
  const auto q = problem.terminal_costs();
  GraphSolution sol;
  if (initial.empty()) {
    sol.value.assign(q.begin(), q.end());
  } else {
    if (initial.size() != m) throw std::invalid_argument("initial guess has the wrong size");
    sol.value.assign(initial.begin(), initial.end());
  }

  const bool in_place = options.order == SweepOrder::GaussSeidel;
  std::vector<double> next(m);
  sol.stats.converged = false;
  for (std::size_t it = 0; it < options.max_iterations; ++it) {
    std::vector<double>& dst = in_place ? sol.value : next;
    double change = 0.0;
    for (NodeId i = 0; i < m; ++i) {
      double best = kInf;
      for (const auto& e : problem.out_edges(i)) {
        best = std::min(best, relax(e.cost, e.termination, q[e.target], sol.value[e.target]));
      }
      const double old = sol.value[i];
      dst[i] = best;
      if (best != old) {
        const double d = std::abs(best - old);
        change = std::max(change, std::isnan(d) ? kInf : d);
      }
    }
    if (!in_place) sol.value.swap(next);
    sol.stats.iterations = it + 1;
    sol.stats.last_change = change;
    if (change <= options.tolerance) {
      sol.stats.converged = true;
      break;
    }
  }
  derive_policy(problem, sol);
  return sol;
}

std::vector<NodeId> local_minima(const GraphProblem& problem) {
  std::vector<NodeId> out;
  const auto q = problem.terminal_costs();
  for (NodeId i = 0; i < problem.node_count(); ++i) {
    bool is_min = true;
    for (const auto& e : problem.out_edges(i)) {
      if (q[e.target] < q[i]) {
        is_min = false;
        break;
      }
    }
    if (is_min) out.push_back(i);
  }
  return out;
}

GraphSolution dijkstra_solve(const GraphProblem& problem, const LabelSettingOptions& options) {
  require_valid(problem);
  const std::size_t m = problem.node_count();
  const auto q = problem.terminal_costs();

  GraphSolution sol;
  sol.value.assign(q.begin(), q.end());
  sol.acceptance_order.reserve(m);
  std::vector<Label> label(m, Label::Far);
  MinHeap heap;

  for (NodeId i : initial_considered(problem, options)) {
    label[i] = Label::Considered;
    heap.emplace(sol.value[i], i);
    ++sol.stats.heap_pushes;
  }

  while (!heap.empty()) {
    const auto [v, j] = heap.top();
    heap.pop();
    ++sol.stats.heap_pops;
    if (label[j] == Label::Accepted || v != sol.value[j]) continue;
    label[j] = Label::Accepted;
    sol.acceptance_order.push_back(j);

    for (const auto& e : problem.in_edges(j)) {
      const NodeId i = e.source;
      if (i == j || label[i] == Label::Accepted) continue;
      const double cand = relax(e.cost, e.termination, q[j], sol.value[j]);
      const bool improved = cand < sol.value[i];
      if (improved) {
        sol.value[i] = cand;
        ++sol.stats.value_updates;
      }
      if (improved || label[i] == Label::Far) {
        label[i] = Label::Considered;
        heap.emplace(sol.value[i], i);
        ++sol.stats.heap_pushes;
      }
    }
  }

  derive_policy(problem, sol);
  return sol;
}

GraphSolution dial_solve(const GraphProblem& problem, const LabelSettingOptions& options) {
  require_valid(problem);
  const std::size_t m = problem.node_count();
  const auto q = problem.terminal_costs();
  const double width = problem.min_transition_cost();
  if (!(width > 0.0)) {
    throw std::invalid_argument("dial_solve requires Delta > 0 (smallest transition cost is " +
                                std::to_string(width) + ")");
  }

  GraphSolution sol;
  sol.value.assign(q.begin(), q.end());
  sol.acceptance_order.reserve(m);

  if (std::isinf(width)) {
    // No transitions other than self-loops: every node stays put.
    for (NodeId i = 0; i < m; ++i) sol.acceptance_order.push_back(i);
    derive_policy(problem, sol);
    return sol;
  }

  const double base = m == 0 ? 0.0 : *std::min_element(q.begin(), q.end());
  const double top = m == 0 ? 0.0 : *std::max_element(q.begin(), q.end());
  double max_cost = 0.0;
  for (const auto& e : problem.edge_list()) {
    if (e.from != e.to) max_cost = std::max(max_cost, e.cost);
  }
  // Pending labels never exceed the current bucket by more than max K + (q_max - q_min).
  const double span = (max_cost + (top - base)) / width;
  if (span > static_cast<double>(std::size_t{1} << 26)) {
    throw std::length_error("dial_solve: bucket array would exceed 2^26 slots");
  }
  const std::size_t slots = static_cast<std::size_t>(std::floor(span)) + 2;
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::vector<std::vector<NodeId>> buckets(slots);
  std::vector<std::size_t> bucket_of(m, kNone);
  std::vector<char> accepted(m, 0);
  std::size_t pending = 0;
  std::size_t current = 0;

  auto bucket_index = [&](double v) {
    return static_cast<std::size_t>(std::floor((v - base) / width));
  };
  auto place = [&](NodeId i) {
    const std::size_t b = std::max(bucket_index(sol.value[i]), current);
    if (bucket_of[i] == b) return;
    if (bucket_of[i] == kNone) ++pending;
    bucket_of[i] = b;
    buckets[b % slots].push_back(i);
    ++sol.stats.heap_pushes;
  };

  for (NodeId i : initial_considered(problem, options)) place(i);

  while (pending > 0) {
    auto& bucket = buckets[current % slots];
    // Relaxations may append to this bucket; index-based loop picks them up.
    for (std::size_t k = 0; k < bucket.size(); ++k) {
      const NodeId j = bucket[k];
      ++sol.stats.heap_pops;
      if (accepted[j] || bucket_of[j] != current) continue;
      accepted[j] = 1;
      --pending;
      sol.acceptance_order.push_back(j);
      for (const auto& e : problem.in_edges(j)) {
        const NodeId i = e.source;
        if (i == j || accepted[i]) continue;
        const double cand = relax(e.cost, e.termination, q[j], sol.value[j]);
        if (cand < sol.value[i]) {
          sol.value[i] = cand;
          ++sol.stats.value_updates;
          place(i);
        } else if (bucket_of[i] == kNone) {
          place(i);
        }
      }
    }
    bucket.clear();
    ++current;
  }

  derive_policy(problem, sol);
  return sol;
}

std::vector<double> solve_v0(const GraphProblem& problem) {
  require_valid(problem);
  const auto q = problem.terminal_costs();
  std::vector<double> v(q.begin(), q.end());
  std::vector<char> done(v.size(), 0);
  MinHeap heap;
  for (NodeId i = 0; i < v.size(); ++i) heap.emplace(v[i], i);
  while (!heap.empty()) {
    const auto [d, j] = heap.top();
    heap.pop();
    if (done[j] || d != v[j]) continue;
    done[j] = 1;
    for (const auto& e : problem.in_edges(j)) {
      if (e.source == j || done[e.source]) continue;
      const double cand = e.cost + v[j];
      if (cand < v[e.source]) {
        v[e.source] = cand;
        heap.emplace(cand, e.source);
      }
    }
  }
  return v;
}

std::vector<double> solve_v1(const GraphProblem& problem) {
  const auto q = problem.terminal_costs();
  std::vector<double> v(q.size(), kInf);
  for (NodeId i = 0; i < q.size(); ++i) {
    for (const auto& e : problem.out_edges(i)) v[i] = std::min(v[i], e.cost + q[e.target]);
  }
  return v;
}

std::optional<double> motionless_probability_bound(const GraphProblem& problem, NodeId i) {
  const auto q = problem.terminal_costs();
  double best_move = kInf;
  for (const auto& e : problem.out_edges(i)) {
    if (e.target != i) best_move = std::min(best_move, e.cost + q[e.target]);
  }
  if (!(q[i] < best_move)) return std::nullopt;
  if (std::isinf(best_move)) return 0.0;
  return q[i] / best_move;
}

std::vector<NodeId> extract_path(const GraphSolution& solution, NodeId start) {
  const std::size_t m = solution.policy.size();
  if (start >= m) throw std::out_of_range("extract_path: start node out of range");
  std::vector<NodeId> path{start};
  std::vector<char> seen(m, 0);
  seen[start] = 1;
  NodeId cur = start;
  while (solution.policy[cur] != cur) {
    cur = solution.policy[cur];
    if (seen[cur]) {
      std::ostringstream ss;
      ss << "policy cycle through node " << cur << " before reaching a motionless node";
      throw std::runtime_error(ss.str());
    }
    seen[cur] = 1;
    path.push_back(cur);
  }
  return path;
}

double path_cost(const GraphProblem& problem, std::span<const NodeId> path) {
  if (path.empty()) throw std::invalid_argument("path_cost: empty path");
  auto transition = [&](NodeId a, NodeId b) {
    if (a >= problem.node_count() || b >= problem.node_count()) {
      throw std::invalid_argument("path_cost: node out of range");
    }
    for (const auto& e : problem.out_edges(a)) {
      if (e.target == b) return e;
    }
    std::ostringstream ss;
    ss << "path_cost: no transition " << a << " -> " << b;
    throw std::invalid_argument(ss.str());
  };

  const auto q = problem.terminal_costs();
  double survive = 1.0;  // probability of no termination during the first t transitions
  double running = 0.0;  // sum of K along the first t transitions
  double expected = 0.0;
  for (std::size_t t = 1; t < path.size(); ++t) {
    const auto e = transition(path[t - 1], path[t]);
    running += e.cost;
    expected += survive * e.termination * (running + q[path[t]]);
    survive *= 1.0 - e.termination;
  }
  const NodeId last = path.back();
  const auto stay = transition(last, last);
  // Geometric number of self-transitions until termination, mean 1/p.
  const double tail = running + q[last] + (stay.cost == 0.0 ? 0.0 : stay.cost / stay.termination);
  return expected + survive * tail;
}

double bellman_residual(const GraphProblem& problem, std::span<const double> value) {
  const auto q = problem.terminal_costs();
  double worst = 0.0;
  for (NodeId i = 0; i < problem.node_count(); ++i) {
    double best = kInf;
    for (const auto& e : problem.out_edges(i)) {
      best = std::min(best, relax(e.cost, e.termination, q[e.target], value[e.target]));
    }
    worst = std::max(worst, std::abs(best - value[i]));
  }
  return worst;
}

}  // namespace uhp
