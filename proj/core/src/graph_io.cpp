#include "uhp/graph_io.hpp"

#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "uhp/csv.hpp"

namespace uhp {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

double number(std::string_view word, std::size_t line_no) {
  try {
    return parse_double(word);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

NodeId node_index(std::string_view word, std::size_t line_no, std::size_t node_count) {
  const double v = number(word, line_no);
  if (v < 0 || v != static_cast<double>(static_cast<long long>(v))) {
    throw ParseError(line_no, "node index must be a non-negative integer, got '" +
                                  std::string(word) + "'");
  }
  const auto i = static_cast<NodeId>(v);
  if (i >= node_count) {
    throw ParseError(line_no, "node index " + std::to_string(i) + " outside [0, " +
                                  std::to_string(node_count) + ")");
  }
  return i;
}

}  // namespace

GraphProblem parse_graph(std::string_view text, std::optional<double> termination_override) {
  std::optional<std::size_t> node_count;
  double default_p = 0.5;
  std::vector<double> q;
  std::vector<char> q_seen;
  struct PendingEdge {
    EdgeSpec spec;
    bool explicit_p;
  };
  std::vector<PendingEdge> edges;
  std::map<std::pair<NodeId, NodeId>, std::size_t> seen_edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto words = split_words(line);
    if (words.empty()) continue;
    const auto key = words[0];

    if (key == "nodes") {
      if (words.size() != 2) throw ParseError(line_no, "expected 'nodes M'");
      if (node_count) throw ParseError(line_no, "duplicate 'nodes' line");
      const double m = number(words[1], line_no);
      if (!(m >= 1) || m != static_cast<double>(static_cast<long long>(m))) {
        throw ParseError(line_no, "node count must be a positive integer");
      }
      node_count = static_cast<std::size_t>(m);
      q.assign(*node_count, 0.0);
      q_seen.assign(*node_count, 0);
      continue;
    }
    if (!node_count) throw ParseError(line_no, "'" + std::string(key) + "' before 'nodes M'");

    if (key == "p") {
      if (words.size() != 2) throw ParseError(line_no, "expected 'p value'");
      default_p = number(words[1], line_no);
    } else if (key == "q") {
      if (words.size() != 3) throw ParseError(line_no, "expected 'q i value'");
      const NodeId i = node_index(words[1], line_no, *node_count);
      if (q_seen[i]) throw ParseError(line_no, "terminal cost of node " + std::to_string(i) +
                                                   " given twice");
      q[i] = number(words[2], line_no);
      q_seen[i] = 1;
    } else if (key == "edge") {
      if (words.size() != 4 && words.size() != 5) {
        throw ParseError(line_no, "expected 'edge i j K [p]'");
      }
      PendingEdge e{};
      e.spec.from = node_index(words[1], line_no, *node_count);
      e.spec.to = node_index(words[2], line_no, *node_count);
      e.spec.cost = number(words[3], line_no);
      e.explicit_p = words.size() == 5;
      if (e.explicit_p) e.spec.termination = number(words[4], line_no);
      if (!seen_edges.emplace(std::pair{e.spec.from, e.spec.to}, edges.size()).second) {
        throw ParseError(line_no, "duplicate edge " + std::to_string(e.spec.from) + " -> " +
                                      std::to_string(e.spec.to));
      }
      edges.push_back(e);
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!node_count) throw ParseError(0, "missing 'nodes M' line");

  std::vector<EdgeSpec> specs;
  specs.reserve(edges.size() + *node_count);
  for (auto& e : edges) {
    if (!e.explicit_p) e.spec.termination = default_p;
    specs.push_back(e.spec);
  }
  for (NodeId i = 0; i < *node_count; ++i) {
    if (!seen_edges.count({i, i})) specs.push_back(EdgeSpec{i, i, 0.0, default_p});
  }
  if (termination_override) {
    for (auto& s : specs) s.termination = *termination_override;
  }
  return GraphProblem(std::move(q), std::move(specs));
}

GraphProblem read_graph_file(const std::filesystem::path& path,
                             std::optional<double> termination_override) {
  return parse_graph(read_text_file(path), termination_override);
}

std::string format_graph(const GraphProblem& problem) {
  std::ostringstream out;
  out << "nodes " << problem.node_count() << '\n';
  for (NodeId i = 0; i < problem.node_count(); ++i) {
    out << "q " << i << ' ' << format_double(problem.terminal_cost(i)) << '\n';
  }
  for (const auto& e : problem.edge_list()) {
    out << "edge " << e.from << ' ' << e.to << ' ' << format_double(e.cost) << ' '
        << format_double(e.termination) << '\n';
  }
  return out.str();
}

std::string format_solution_csv(const GraphProblem& problem, const GraphSolution& solution) {
  std::string out = "node,V,q,motionless,policy_successor\n";
  for (NodeId i = 0; i < problem.node_count(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += format_double(solution.value[i]);
    out += ',';
    out += format_double(problem.terminal_cost(i));
    out += solution.motionless[i] ? ",1," : ",0,";
    out += std::to_string(solution.policy[i]);
    out += '\n';
  }
  return out;
}

}  // namespace uhp
