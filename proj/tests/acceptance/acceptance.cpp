// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "generators.hpp"
#include "uhp/analytic.hpp"
#include "uhp/graph_solvers.hpp"
#include "uhp/grid_solvers.hpp"
#include "uhp/local_update.hpp"
#include "uhp/scenario.hpp"
#include "uhp/trajectory.hpp"

using namespace uhp;
using namespace uhp::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "FAILED ") + what;
  }
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

bool within(double measured, double target, double rel) {
  return std::abs(measured - target) <= rel * target;
}

double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::isinf(a[k]) && a[k] == b[k]) continue;
    d = std::max(d, std::abs(a[k] - b[k]));
  }
  return d;
}

std::vector<double> linf_errors(RadialCase c, double lambda, const std::vector<std::size_t>& grids) {
  std::vector<double> out;
  for (const auto n : grids) {
    const GridProblem p = radial_problem(c, lambda, n);
    out.push_back(error_norms(p.grid, fmm_solve(p).value, exact_field(c, lambda, p.grid)).linf);
  }
  return out;
}

void check_table(Verdict& v, const std::string& label, const std::vector<double>& got,
                 const std::vector<double>& want, double rel) {
  for (std::size_t k = 0; k < got.size(); ++k) {
    v.require(within(got[k], want[k], rel),
              label + fmt(" %.4f", got[k]) + fmt(" vs %.4f", want[k]));
  }
}

Verdict table1() {
  Verdict v;
  const auto t0 = Clock::now();
  const auto e = linf_errors(RadialCase::Trivial, 0.5, {101, 201, 401});
  const double wall = seconds_since(t0);
  check_table(v, "Linf", e, {0.0449, 0.0259, 0.0147}, 0.15);
  // Least-squares slope of log e against log h over the three grids.
  const double order = std::log(e[0] / e[2]) / std::log(4.0);
  v.require(std::abs(order - 1.0) <= 0.2, fmt("order %.3f", order) +
                                              fmt(" (steps %.3f", std::log2(e[0] / e[1])) +
                                              fmt(", %.3f)", std::log2(e[1] / e[2])));
  v.require(wall < 10.0, fmt("%.2f s", wall));
  return v;
}

Verdict table2() {
  Verdict v;
  check_table(v, "lambda 0.5 Linf", linf_errors(RadialCase::Circular, 0.5, {101, 201, 401}),
              {0.0344, 0.0173, 0.0087}, 0.15);
  check_table(v, "lambda 25 Linf", linf_errors(RadialCase::Circular, 25.0, {101, 201, 401}),
              {0.0092, 0.0053, 0.0029}, 0.25);
  return v;
}

Verdict free_boundary() {
  Verdict v;
  double prev = std::numeric_limits<double>::infinity();
  for (const double lam : {0.5, 5.0, 25.0}) {
    const GridProblem p = radial_problem(RadialCase::Circular, lam, 401);
    const GridSolution s = fmm_solve(p);
    const MotionlessSet m = motionless_set(s, p);
    // The outflow boundary; the motionless origin is excluded.
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto k : m.boundary) {
      const double r = std::hypot(p.grid.x(p.grid.col(k)), p.grid.y(p.grid.row(k)));
      if (r < 0.5) continue;
      sum += r;
      ++count;
    }
    const double mean = count ? sum / count : 0.0;
    const double exact = free_boundary_radius(lam);
    v.require(count > 0 && std::abs(mean - exact) <= 2 * p.grid.h,
              "lambda " + fmt("%g", lam) + fmt(": %.5f", mean) + fmt(" vs %.5f", exact));
    v.require(mean < prev && mean > 1.0 && mean < 2.0, fmt("ordered in (1, 2) at %.5f", mean));
    prev = mean;
  }
  return v;
}

Verdict graph_oracles() {
  Verdict v;
  const auto t0 = Clock::now();
  Rng rng(20240601);
  double vi_gap = 0.0;
  double dial_gap = 0.0;
  bool converged = true;
  for (int trial = 0; trial < 100; ++trial) {
    const GraphProblem p = random_graph(rng, 200, 0.1, trial % 2 == 0);
    const auto d = dijkstra_solve(p);
    const auto it = value_iteration(p);
    converged = converged && it.stats.converged;
    vi_gap = std::max(vi_gap, sup_diff(d.value, it.value));
    dial_gap = std::max(dial_gap, sup_diff(d.value, dial_solve(p).value));
  }
  const double wall = seconds_since(t0);
  v.require(converged, "value iteration converged");
  v.require(vi_gap <= 1e-9, fmt("dijkstra vs vi %.2e", vi_gap));
  v.require(dial_gap <= 1e-12, fmt("dial vs dijkstra %.2e", dial_gap));
  v.require(wall < 5.0, fmt("%.2f s", wall));
  return v;
}

Verdict closed_forms() {
  Verdict v;
  double worst = 0.0;
  for (const double p : {0.05, 0.1, 0.5}) {
    worst = std::max(worst, std::abs(dijkstra_solve(free_chain(p)).value[0] - std::min(1.0, 10 * p)));
  }
  v.require(worst <= 1e-12, fmt("free chain %.1e", worst));
  worst = 0.0;
  for (const double p : {0.1, 0.5, 0.9}) {
    worst = std::max(worst, std::abs(dijkstra_solve(costly_chain(1.0, p)).value[0] - (2 + 8 * p)));
  }
  v.require(worst <= 1e-12, fmt("costly chain %.1e", worst));
  worst = 0.0;
  for (const double p : {0.1, 0.5, 0.9}) {
    const auto s = value_iteration(swap_pair(p));
    for (const double x : s.value) worst = std::max(worst, std::abs(x - 1.0 / p));
  }
  v.require(worst <= 1e-8, fmt("swap pair %.1e", worst));
  return v;
}

Verdict update_equivalence() {
  Verdict v;
  Rng rng(77);
  double interior_gap = 0.0;
  double vertex_gap = 0.0;
  int interior = 0;
  int vertex = 0;
  for (int k = 0; k < 1000; ++k) {
    const PointData p = random_point(rng);
    const double v1 = rng.uniform(-1.0, 6.0);
    const double v2 = v1 + rng.uniform(-1.5, 1.5) * p.h / p.speed;
    const auto sl = semi_lagrangian_minimize(v1, v2, p);
    if (sl.value >= p.terminal_cost) continue;
    if (sl.interior) {
      ++interior;
      interior_gap = std::max(interior_gap, std::abs(sl.value - quadrant_update(v1, v2, p)));
    } else {
      ++vertex;
      vertex_gap = std::max(vertex_gap, std::abs(sl.value - one_sided_update(std::min(v1, v2), p)));
    }
  }
  v.require(interior_gap <= 1e-10, std::to_string(interior) + fmt(" interior, gap %.1e", interior_gap));
  v.require(vertex_gap <= 1e-10, std::to_string(vertex) + fmt(" vertex, gap %.1e", vertex_gap));
  v.require(interior > 0 && vertex > 0, "both kinds drawn");
  return v;
}

GridProblem random_grid_problem(Rng& rng) {
  Grid2D g;
  g.nx = rng.index(2, 30);
  g.ny = rng.index(2, 30);
  g.h = rng.uniform(0.02, 1.0);
  GridProblem p;
  p.grid = g;
  p.speed.resize(g.size());
  p.running_cost.resize(g.size());
  p.terminal_cost.resize(g.size());
  p.rate.resize(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    p.speed[k] = rng.uniform(0.2, 2.0);
    p.running_cost[k] = rng.uniform(0.0, 2.0);
    p.terminal_cost[k] = rng.uniform(0.0, 5.0);
    p.rate[k] = rng.uniform(0.05, 5.0);
  }
  return p;
}

Verdict properties() {
  Verdict v;
  Rng rng(4242);
  bool graph_obstacle = true;
  bool sandwich = true;
  bool p_monotone = true;
  bool p_nested = true;
  for (int trial = 0; trial < 100; ++trial) {
    const GraphProblem base = random_graph(rng, 120, 0.1, true);
    const auto v0 = solve_v0(base);
    const auto v1 = solve_v1(base);
    std::vector<double> prev;
    std::vector<char> prev_m;
    for (const double p : {0.05, 0.2, 0.5, 0.8, 0.95}) {
      const GraphProblem g = with_termination(base, p);
      const auto s = dijkstra_solve(g);
      for (std::size_t i = 0; i < g.node_count(); ++i) {
        graph_obstacle = graph_obstacle && s.value[i] <= g.terminal_cost(i);
        sandwich = sandwich && v0[i] <= s.value[i] + 1e-9 && s.value[i] <= v1[i] + 1e-9;
        if (!prev.empty()) {
          p_monotone = p_monotone && prev[i] <= s.value[i] + 1e-9;
          p_nested = p_nested && (!prev_m[i] || s.motionless[i]);
        }
      }
      prev = s.value;
      prev_m = s.motionless;
    }
  }
  v.require(graph_obstacle, "graph V <= q");
  v.require(sandwich, "V0 <= Vp <= V1");
  v.require(p_monotone, "V nondecreasing in p");
  v.require(p_nested, "motionless nodes nested in p");

  bool update_monotone = true;
  for (int k = 0; k < 5000; ++k) {
    const PointData pd = random_point(rng);
    std::array<double, 4> nb;
    for (auto& x : nb) x = rng.coin(0.15) ? std::numeric_limits<double>::infinity() : rng.uniform(-1.0, 6.0);
    const double before = node_update(nb, pd);
    auto raised = nb;
    const std::size_t which = rng.index(0, 3);
    raised[which] += rng.uniform(0.0, 1.0);
    update_monotone = update_monotone && node_update(raised, pd) >= before;
  }
  v.require(update_monotone, "node_update monotone in neighbors");

  bool grid_obstacle = true;
  bool lambda_monotone = true;
  bool lambda_nested = true;
  for (int trial = 0; trial < 40; ++trial) {
    GridProblem p = random_grid_problem(rng);
    std::vector<double> prev;
    std::vector<char> prev_m;
    for (const double scale : {0.1, 0.5, 1.0, 2.0, 10.0}) {
      GridProblem q = p;
      for (auto& r : q.rate) r *= scale;
      const auto s = fmm_solve(q);
      const auto m = motionless_set(s, q);
      for (std::size_t k = 0; k < q.grid.size(); ++k) {
        grid_obstacle = grid_obstacle && s.value[k] <= q.terminal_cost[k];
        if (!prev.empty()) {
          lambda_monotone = lambda_monotone && prev[k] <= s.value[k] + 1e-9;
          lambda_nested = lambda_nested && (!prev_m[k] || m.mask[k]);
        }
      }
      prev = s.value;
      prev_m = m.mask;
    }
  }
  v.require(grid_obstacle, "grid V <= q");
  v.require(lambda_monotone, "V nondecreasing in lambda");
  v.require(lambda_nested, "motionless sets nested in lambda");
  return v;
}

GridScenario maze(double lambda) {
  ScenarioOverrides o;
  o.rate = lambda;
  return read_grid_scenario(std::string(UHP_SCENARIO_DIR) + "/maze.json", o);
}

Verdict fmm_vs_sweep() {
  Verdict v;
  const std::vector<std::pair<std::string, GridProblem>> cases{
      {"trivial", radial_problem(RadialCase::Trivial, 0.5, 101)},
      {"circular", radial_problem(RadialCase::Circular, 0.5, 101)},
      {"maze", maze(0.45).problem},
  };
  for (const auto& [name, p] : cases) {
    const auto sweep = sweep_oracle(p);
    const double d = sup_diff(fmm_solve(p).value, sweep.value);
    v.require(sweep.stats.converged && d <= 1e-8, name + fmt(" %.1e", d));
  }
  return v;
}

bool inside_wall(double x, double y) {
  struct Rect { double x0, x1, y0, y1; };
  static constexpr Rect walls[] = {
      {2.0, 8.0, 2.8, 3.2}, {2.0, 8.0, 6.8, 7.2}, {1.8, 2.2, 2.8, 7.2}, {7.8, 8.2, 2.8, 5.4}};
  for (const auto& w : walls) {
    if (x > w.x0 && x < w.x1 && y > w.y0 && y < w.y1) return true;
  }
  return false;
}

Verdict maze_checks() {
  Verdict v;
  {
    const GridScenario sc = maze(0.01);
    const GridSolution s = fmm_solve(sc.problem);
    const TrajectoryPath path = trace(s, sc.problem, 5.0, 5.0);
    const auto& end = path.points.back();
    const double miss = std::hypot(end.x - 9.0, end.y - 0.1);
    v.require(path.ok() && miss <= 3 * sc.problem.grid.h,
              "lambda 0.01 ends " + fmt("%.3f", miss) + " from the likelier caller");
    bool clear = true;
    for (std::size_t k = 1; k < path.points.size(); ++k) {
      const auto& a = path.points[k - 1];
      const auto& b = path.points[k];
      for (int t = 0; t <= 50; ++t) {
        const double u = t / 50.0;
        clear = clear && !inside_wall(a.x + u * (b.x - a.x), a.y + u * (b.y - a.y));
      }
    }
    v.require(clear, "polyline avoids the walls");
  }
  {
    const GridScenario sc = maze(1.5);
    const GridProblem& p = sc.problem;
    const MotionlessSet m = motionless_set(fmm_solve(p), p);
    const double qmin = *std::min_element(p.terminal_cost.begin(), p.terminal_cost.end());
    std::size_t others = 0;
    for (std::size_t k = 0; k < m.mask.size(); ++k) others += m.mask[k] && p.terminal_cost[k] > qmin;
    v.require(others > 0, "lambda 1.5: " + std::to_string(others) + " motionless points besides argmin q");
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"1 trivial convergence table", table1},
      {"2 circular convergence tables", table2},
      {"3 free-boundary radius", free_boundary},
      {"4 graph oracle equivalence", graph_oracles},
      {"5 closed-form graph values", closed_forms},
      {"6 update equivalence", update_equivalence},
      {"7 property suites", properties},
      {"8 fmm vs sweep", fmm_vs_sweep},
      {"9 maze checks", maze_checks},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %s: %s\n", v.pass ? "PASS" : "FAIL", name.c_str(), v.detail.c_str());
    std::fflush(stdout);
    failed += !v.pass;
  }
  return failed == 0 ? 0 : 1;
}
