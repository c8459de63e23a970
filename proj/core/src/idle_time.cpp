#include "uhp/idle_time.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "uhp/csv.hpp"

namespace uhp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> dijkstra_into(const IdleScenario& s,
                                  const std::vector<std::vector<IdleScenario::Link>>& reverse,
                                  NodeId target) {
  std::vector<double> d(s.node_count, kInf);
  using Entry = std::pair<double, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  d[target] = 0.0;
  heap.emplace(0.0, target);
  while (!heap.empty()) {
    const auto [dist, j] = heap.top();
    heap.pop();
    if (dist != d[j]) continue;
    for (const auto& link : reverse[j]) {
      const double cand = dist + link.travel_time;
      if (cand < d[link.from]) {
        d[link.from] = cand;
        heap.emplace(cand, link.from);
      }
    }
  }
  return d;
}

std::vector<double> floyd_warshall(const IdleScenario& s) {
  const std::size_t m = s.node_count;
  std::vector<double> d(m * m, kInf);
  for (NodeId i = 0; i < m; ++i) d[i * m + i] = 0.0;
  for (const auto& link : s.links) {
    auto& cell = d[link.from * m + link.to];
    cell = std::min(cell, link.travel_time);
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      const double dik = d[i * m + k];
      if (std::isinf(dik)) continue;
      for (std::size_t j = 0; j < m; ++j) {
        const double cand = dik + d[k * m + j];
        if (cand < d[i * m + j]) d[i * m + j] = cand;
      }
    }
  }
  return d;
}

}  // namespace

void check_scenario(const IdleScenario& s) {
  if (s.node_count == 0) throw std::invalid_argument("idle scenario has no nodes");
  if (!(s.call_rate > 0.0) || !std::isfinite(s.call_rate)) {
    throw std::invalid_argument("call rate must be positive and finite");
  }
  for (const auto& link : s.links) {
    if (link.from >= s.node_count || link.to >= s.node_count) {
      throw std::invalid_argument("link endpoint out of range");
    }
    if (link.from == link.to) throw std::invalid_argument("self links are implicit");
    if (!(link.travel_time > 0.0) || !std::isfinite(link.travel_time)) {
      throw std::invalid_argument("travel times must be positive and finite");
    }
  }
  double total = 0.0;
  for (const auto& c : s.calls) {
    if (c.location >= s.node_count) throw std::invalid_argument("call location out of range");
    if (!(c.probability >= 0.0)) throw std::invalid_argument("negative call probability");
    total += c.probability;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream ss;
    ss << "call probabilities sum to " << format_double(total) << ", expected 1";
    throw std::invalid_argument(ss.str());
  }
}

TravelTimes travel_times(const IdleScenario& s, std::span<const NodeId> targets,
                         DistanceMethod method) {
  const std::size_t m = s.node_count;
  if (method == DistanceMethod::Auto) {
    const double threshold = m > 1 ? static_cast<double>(m) / std::log(static_cast<double>(m))
                                   : 1.0;
    method = static_cast<double>(targets.size()) < threshold ? DistanceMethod::RepeatedDijkstra
                                                             : DistanceMethod::FloydWarshall;
  }

  TravelTimes out;
  out.node_count = m;
  out.targets.assign(targets.begin(), targets.end());
  out.times.assign(targets.size() * m, kInf);

  if (method == DistanceMethod::RepeatedDijkstra) {
    std::vector<std::vector<IdleScenario::Link>> reverse(m);
    for (const auto& link : s.links) reverse[link.to].push_back(link);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      const auto d = dijkstra_into(s, reverse, targets[t]);
      std::copy(d.begin(), d.end(), out.times.begin() + static_cast<std::ptrdiff_t>(t * m));
    }
  } else {
    const auto d = floyd_warshall(s);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      for (NodeId x = 0; x < m; ++x) out.times[t * m + x] = d[x * m + targets[t]];
    }
  }
  return out;
}

TravelTimes all_pairs_times(const IdleScenario& s, DistanceMethod method) {
  std::vector<NodeId> all(s.node_count);
  for (NodeId i = 0; i < all.size(); ++i) all[i] = i;
  return travel_times(s, all, method);
}

std::vector<double> expected_response_time(const IdleScenario& s) {
  std::vector<NodeId> support;
  std::vector<double> weight;
  for (const auto& c : s.calls) {
    if (c.probability == 0.0) continue;
    support.push_back(c.location);
    weight.push_back(c.probability);
  }
  const auto d = travel_times(s, support);
  std::vector<double> q(s.node_count, 0.0);
  for (std::size_t t = 0; t < support.size(); ++t) {
    for (NodeId x = 0; x < s.node_count; ++x) q[x] += weight[t] * d(x, t);
  }
  return q;
}

double idle_transition_cost(double rate, double tau) {
  const double x = rate * tau;
  // e^{-x} - 1 + x without cancellation for small x.
  return (std::expm1(-x) + x) / rate;
}

double idle_termination_probability(double rate, double tau) {
  const double p = -std::expm1(-rate * tau);
  return std::min(p, std::nextafter(1.0, 0.0));
}

GraphProblem build_problem(const IdleScenario& s) {
  check_scenario(s);
  auto q = expected_response_time(s);
  std::vector<EdgeSpec> edges;
  edges.reserve(s.links.size() + s.node_count);
  for (NodeId i = 0; i < s.node_count; ++i) {
    edges.push_back(EdgeSpec{i, i, 0.0, kIdleSelfTermination});
  }
  // Parallel links collapse to the fastest one.
  std::vector<IdleScenario::Link> links = s.links;
  std::sort(links.begin(), links.end(), [](const auto& a, const auto& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.travel_time < b.travel_time;
  });
  for (std::size_t k = 0; k < links.size(); ++k) {
    if (k > 0 && links[k].from == links[k - 1].from && links[k].to == links[k - 1].to) continue;
    const auto& l = links[k];
    edges.push_back(EdgeSpec{l.from, l.to, idle_transition_cost(s.call_rate, l.travel_time),
                             idle_termination_probability(s.call_rate, l.travel_time)});
  }
  return GraphProblem(std::move(q), std::move(edges));
}

IdleScenario parse_idle_scenario(std::string_view text) {
  IdleScenario s;
  bool have_nodes = false;
  bool have_rate = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto num = [&](const std::string& w) {
    try {
      return parse_double(w);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  };
  auto index = [&](const std::string& w) {
    const double v = num(w);
    if (v < 0 || v != std::floor(v) || v >= static_cast<double>(s.node_count)) {
      throw ParseError(line_no, "bad node index '" + w + "'");
    }
    return static_cast<NodeId>(v);
  };
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::vector<std::string> w;
    for (std::string tok; in >> tok;) w.push_back(tok);
    if (w.empty()) continue;
    if (w[0] == "nodes") {
      if (w.size() != 2) throw ParseError(line_no, "expected 'nodes M'");
      const double m = num(w[1]);
      if (!(m >= 1) || m != std::floor(m)) throw ParseError(line_no, "bad node count");
      s.node_count = static_cast<std::size_t>(m);
      have_nodes = true;
      continue;
    }
    if (!have_nodes) throw ParseError(line_no, "'" + w[0] + "' before 'nodes M'");
    if (w[0] == "lambda") {
      if (w.size() != 2) throw ParseError(line_no, "expected 'lambda rate'");
      s.call_rate = num(w[1]);
      have_rate = true;
    } else if (w[0] == "edge" || w[0] == "link") {
      if (w.size() != 4) throw ParseError(line_no, "expected '" + w[0] + " i j tau'");
      const NodeId i = index(w[1]);
      const NodeId j = index(w[2]);
      const double tau = num(w[3]);
      s.links.push_back({i, j, tau});
      if (w[0] == "link") s.links.push_back({j, i, tau});
    } else if (w[0] == "call") {
      if (w.size() != 3) throw ParseError(line_no, "expected 'call i probability'");
      s.calls.push_back({index(w[1]), num(w[2])});
    } else {
      throw ParseError(line_no, "unknown directive '" + w[0] + "'");
    }
  }
  if (!have_nodes) throw ParseError(0, "missing 'nodes M' line");
  if (!have_rate) throw ParseError(0, "missing 'lambda rate' line");
  return s;
}

IdleScenario read_idle_file(const std::filesystem::path& path) {
  return parse_idle_scenario(read_text_file(path));
}

}  // namespace uhp
