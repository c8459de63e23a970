#ifndef UHP_IDLE_TIME_HPP_
#define UHP_IDLE_TIME_HPP_

#include <filesystem>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "uhp/graph_problem.hpp"

namespace uhp {

/// Optimal use of idle time: a single server (e.g. an ambulance) moves on
/// a graph while waiting for the first request of a Poisson stream.
struct IdleScenario {
  struct Link {
    NodeId from;
    NodeId to;
    double travel_time;  // tau_ij > 0
  };
  struct Call {
    NodeId location;
    double probability;
  };

  std::size_t node_count = 0;
  std::vector<Link> links;
  double call_rate = 1.0;  // lambda, requests per unit time
  std::vector<Call> calls;
};

/// Throws std::invalid_argument unless travel times are positive, the
/// rate is positive and call probabilities are non-negative and sum to 1
/// within 1e-12.
void check_scenario(const IdleScenario& scenario);

enum class DistanceMethod { Auto, RepeatedDijkstra, FloydWarshall };

/// d(x, target) for a list of targets, stored target-major.
struct TravelTimes {
  std::size_t node_count = 0;
  std::vector<NodeId> targets;
  std::vector<double> times;

  double operator()(NodeId from, std::size_t target_slot) const {
    return times[target_slot * node_count + from];
  }
};

/// Minimal travel times into each target. Auto picks repeated Dijkstra when
/// the number of targets is below M / log M and Floyd-Warshall otherwise.
/// Unreachable pairs are +inf.
TravelTimes travel_times(const IdleScenario& scenario, std::span<const NodeId> targets,
                         DistanceMethod method = DistanceMethod::Auto);

/// travel_times with every node as a target.
TravelTimes all_pairs_times(const IdleScenario& scenario,
                            DistanceMethod method = DistanceMethod::Auto);

/// Expected travel time to the next caller: q(x) = sum P(x~) d(x, x~).
std::vector<double> expected_response_time(const IdleScenario& scenario);

/// Expected extra wait caused by committing to a transition of duration
/// tau: (e^{-lambda tau} - (1 - lambda tau)) / lambda.
double idle_transition_cost(double rate, double tau);

/// Probability that the first call arrives during the transition: 1 - e^{-lambda tau}.
double idle_termination_probability(double rate, double tau);

/// Self-transitions carry this placeholder probability. A motionless node
/// pays q directly, so its value never depends on it.
inline constexpr double kIdleSelfTermination = 0.5;

/// Randomly-terminated graph problem whose value is the minimal expected
/// wait for the first caller.
GraphProblem build_problem(const IdleScenario& scenario);

/// Text format:
///   nodes M
///   lambda rate
///   edge i j tau      # directed
///   link i j tau      # both directions
///   call i probability
IdleScenario parse_idle_scenario(std::string_view text);
IdleScenario read_idle_file(const std::filesystem::path& path);

}  // namespace uhp

#endif  // UHP_IDLE_TIME_HPP_
