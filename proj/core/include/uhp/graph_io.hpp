#ifndef UHP_GRAPH_IO_HPP_
#define UHP_GRAPH_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "uhp/graph_problem.hpp"
#include "uhp/graph_solvers.hpp"

namespace uhp {

/// Line-oriented edge list, 0-based node indices, '#' starts a comment:
///
///   nodes M
///   p 0.25            # optional default termination probability (0.5 otherwise)
///   q i value
///   edge i j K [p]    # p falls back to the default
///
/// Every node gets a zero-cost self-transition unless an explicit
/// `edge i i ...` line is present. `termination_override`, when set,
/// replaces every termination probability (the CLI's --p).
/// Throws ParseError naming the offending line.
GraphProblem parse_graph(std::string_view text,
                         std::optional<double> termination_override = std::nullopt);

GraphProblem read_graph_file(const std::filesystem::path& path,
                             std::optional<double> termination_override = std::nullopt);

/// Inverse of parse_graph (explicit self-loops, one p per edge).
std::string format_graph(const GraphProblem& problem);

/// CSV with header node,V,q,motionless,policy_successor.
std::string format_solution_csv(const GraphProblem& problem, const GraphSolution& solution);

}  // namespace uhp

#endif  // UHP_GRAPH_IO_HPP_
