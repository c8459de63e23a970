#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "generators.hpp"
#include "uhp/graph_oracles.hpp"
#include "uhp/graph_problem.hpp"
#include "uhp/graph_solvers.hpp"

using namespace uhp;
using namespace uhp::testing;

namespace {

double sup_diff(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

bool has_kind(const std::vector<Violation>& v, Assumption kind) {
  for (const auto& x : v) {
    if (x.kind == kind) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("constructor rejects malformed edge lists") {
  CHECK_THROWS_AS(GraphProblem({0.0}, {{0, 1, 1.0, 0.5}}), std::invalid_argument);
  CHECK_THROWS_AS(GraphProblem({0.0, 0.0}, {{0, 1, 1.0, 0.5}, {0, 1, 2.0, 0.5}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GraphProblem({0.0, 0.0}, {{0, 1, NAN, 0.5}}), std::invalid_argument);
}

TEST_CASE("adjacency and Delta") {
  const GraphProblem g = two_node();
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 4);
  CHECK(g.min_transition_cost() == 2.0);
  CHECK(g.max_out_degree() == 2);
  REQUIRE(g.in_edges(1).size() == 2);
  CHECK(g.in_edges(1)[0].source == 0);
  CHECK(g.uniform_termination() == 0.5);
  const GraphProblem lonely({3.0}, {{0, 0, 0.0, 0.5}});
  CHECK(std::isinf(lonely.min_transition_cost()));
}

TEST_CASE("validate") {
  SUBCASE("assumptions hold") { CHECK(validate(two_node()).empty()); }
  SUBCASE("two-cycle with expensive self-loops breaks zero self-cost") {
    const auto v = validate(swap_pair(0.5));
    REQUIRE(v.size() == 2);
    CHECK(v[0].kind == Assumption::ZeroSelfCost);
    CHECK(v[0].message.find("A2 nonzero self-cost") == 0);
  }
  SUBCASE("two-cycle without self-loops") {
    const auto v = validate(swap_pair(0.5, false));
    REQUIRE(v.size() == 2);
    CHECK(v[0].kind == Assumption::SelfTransition);
    CHECK(v[0].message == "A1 missing self-transition at node 0");
  }
  SUBCASE("K_11 = 10") {
    const GraphProblem g({1.0, 2.0}, {{0, 0, 10.0, 0.5}, {0, 1, 1.0, 0.5}, {1, 1, 0.0, 0.5}});
    const auto v = validate(g);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == Assumption::ZeroSelfCost);
    CHECK(v[0].node == 0);
  }
  SUBCASE("negative cost and bad probability") {
    const GraphProblem g({1.0, 2.0},
                         {{0, 0, 0.0, 0.5}, {0, 1, -1.0, 0.5}, {1, 1, 0.0, 1.0}});
    const auto v = validate(g);
    CHECK(has_kind(v, Assumption::CostLowerBound));
    CHECK(has_kind(v, Assumption::Probability));
  }
  SUBCASE("infinite terminal cost") {
    const GraphProblem g({INFINITY}, {{0, 0, 0.0, 0.5}});
    CHECK(has_kind(validate(g), Assumption::TerminalCost));
  }
}

TEST_CASE("normalize_self_costs") {
  SUBCASE("zero self-costs give the same problem") {
    const GraphProblem g = two_node();
    const GraphProblem n = normalize_self_costs(g);
    CHECK(n.terminal_cost(0) == 10.0);
    CHECK(n.terminal_cost(1) == 1.0);
    CHECK(n.out_edges(0)[1].cost == 2.0);
  }
  SUBCASE("single node with a priced self-loop") {
    const GraphProblem g({3.0}, {{0, 0, 2.0, 0.5}});
    const GraphProblem n = normalize_self_costs(g);
    CHECK(n.terminal_cost(0) == 7.0);
    CHECK(n.out_edges(0)[0].cost == 0.0);
    // V = 2 + 0.5 * 3 + 0.5 V
    CHECK(value_iteration(g).value[0] == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(dijkstra_solve(n).value[0] == 7.0);
  }
  SUBCASE("cost lower bound unrecoverable") {
    CHECK_THROWS_AS(normalize_self_costs(swap_pair(0.5)), std::domain_error);
    try {
      normalize_self_costs(swap_pair(0.5));
    } catch (const std::domain_error& e) {
      CHECK(std::string(e.what()).find("= -9") != std::string::npos);
    }
  }
  SUBCASE("edge-varying probabilities rejected") {
    const GraphProblem g({1.0, 2.0}, {{0, 0, 0.0, 0.5}, {0, 1, 1.0, 0.3}, {1, 1, 0.0, 0.5}});
    CHECK_THROWS_AS(normalize_self_costs(g), std::invalid_argument);
  }
  SUBCASE("missing self-loop rejected") {
    CHECK_THROWS_AS(normalize_self_costs(swap_pair(0.5, false)), std::invalid_argument);
  }
  SUBCASE("values agree on random instances") {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
      const GraphProblem base = random_graph(rng, 60, 0.1, true);
      std::vector<double> extra(base.node_count());
      for (auto& c : extra) c = rng.uniform(0.0, 3.0);
      auto edges = base.edge_list();
      for (auto& e : edges) e.cost += extra[e.to];
      const auto q = base.terminal_costs();
      const GraphProblem priced({q.begin(), q.end()}, edges);
      const GraphProblem n = normalize_self_costs(priced);
      CHECK(validate(n).empty());
      const auto vi = value_iteration(priced);
      REQUIRE(vi.stats.converged);
      CHECK(sup_diff(vi.value, dijkstra_solve(n).value) <= 1e-9);
    }
  }
}

TEST_CASE("infinite-horizon conversions") {
  SUBCASE("constant self-cost c, move cost c + d") {
    const double c = 1.5;
    const double d = 0.75;
    DiscountedProblem dp{2, {{0, 0, c}, {0, 1, c + d}, {1, 0, c + d}, {1, 1, c}}, 0.5};
    const GraphProblem g = from_infinite_horizon(dp);
    CHECK(g.uniform_termination() == 0.5);
    CHECK(g.terminal_cost(0) == 2 * c);
    CHECK(g.terminal_cost(1) == 2 * c);
    CHECK(g.out_edges(0)[1].cost == d);
    CHECK(g.out_edges(0)[0].cost == 0.0);
  }
  SUBCASE("zero diagonal keeps costs") {
    DiscountedProblem dp{2, {{0, 0, 0.0}, {0, 1, 3.0}, {1, 1, 0.0}}, 0.5};
    const GraphProblem g = from_infinite_horizon(dp);
    CHECK(g.terminal_cost(0) == 0.0);
    CHECK(g.out_edges(0)[1].cost == 3.0);
  }
  SUBCASE("round trip and value agreement") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t m = rng.index(2, 40);
      const double alpha = rng.uniform(0.05, 0.95);
      DiscountedProblem dp{m, {}, alpha};
      std::vector<double> self(m);
      for (NodeId i = 0; i < m; ++i) {
        self[i] = rng.uniform(0.0, 5.0);
        dp.edges.push_back({i, i, self[i]});
      }
      for (NodeId i = 0; i < m; ++i) {
        for (int k = 0; k < 3; ++k) {
          const NodeId j = rng.index(0, m - 1);
          if (j == i) continue;
          bool dup = false;
          for (const auto& e : dp.edges) dup = dup || (e.from == i && e.to == j);
          if (dup) continue;
          // K~_ij >= K~_jj keeps the converted cost non-negative.
          dp.edges.push_back({i, j, self[j] + rng.uniform(0.0, 2.0)});
        }
      }
      const GraphProblem g = from_infinite_horizon(dp);
      const DiscountedProblem back = to_infinite_horizon(g);
      CHECK(back.discount == doctest::Approx(alpha).epsilon(1e-15));
      const auto sorted = GraphProblem(std::vector<double>(m, 0.0), dp.edges).edge_list();
      REQUIRE(back.edges.size() == sorted.size());
      for (std::size_t k = 0; k < sorted.size(); ++k) {
        CHECK(back.edges[k].cost == doctest::Approx(sorted[k].cost).epsilon(1e-14));
      }
      const auto expected = infinite_horizon_values(dp);
      const auto vi = value_iteration(g);
      CHECK(sup_diff(expected, vi.value) <= 1e-9);
      CHECK(sup_diff(expected, dijkstra_solve(g).value) <= 1e-9);
    }
  }
  SUBCASE("negative converted cost rejected") {
    DiscountedProblem dp{2, {{0, 0, 0.0}, {0, 1, 1.0}, {1, 1, 10.0}}, 0.5};
    CHECK_THROWS_AS(from_infinite_horizon(dp), std::domain_error);
  }
  SUBCASE("bad discount and missing self-loop") {
    CHECK_THROWS_AS(from_infinite_horizon({1, {{0, 0, 1.0}}, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(from_infinite_horizon({2, {{0, 0, 1.0}}, 0.5}), std::invalid_argument);
  }
}

TEST_CASE("classical recursions") {
  const GraphProblem g = costly_chain(1.0, 0.5);
  SUBCASE("one-step finite horizon is the single-step lookahead") {
    CHECK(finite_horizon_values(g, 1) == solve_v1(g));
    CHECK(finite_horizon_values(g, 0) == std::vector<double>{10.0, 9.0, 0.0});
  }
  SUBCASE("exit time to x3") {
    const std::vector<NodeId> exits{2};
    CHECK(exit_time_values(g, exits) == std::vector<double>{2.0, 1.0, 0.0});
  }
  SUBCASE("undiscounted optimal stopping equals the p -> 0 limit") {
    Rng rng(21);
    for (int trial = 0; trial < 20; ++trial) {
      const GraphProblem r = random_graph(rng, 80);
      DiscountedProblem dp{r.node_count(), r.edge_list(), 1.0};
      const auto expected = optimal_stopping_values(dp, r.terminal_costs());
      CHECK(sup_diff(expected, solve_v0(r)) <= 1e-12);
    }
  }
}
