#include <cmath>

#include "doctest.h"
#include "uhp/analytic.hpp"
#include "uhp/grid_solvers.hpp"
#include "uhp/scenario.hpp"
#include "uhp/trajectory.hpp"

using namespace uhp;

namespace {

bool inside_wall(double x, double y) {
  struct Rect { double x0, x1, y0, y1; };
  static constexpr Rect walls[] = {
      {2.0, 8.0, 2.8, 3.2}, {2.0, 8.0, 6.8, 7.2}, {1.8, 2.2, 2.8, 7.2}, {7.8, 8.2, 2.8, 5.4}};
  for (const auto& w : walls) {
    if (x > w.x0 && x < w.x1 && y > w.y0 && y < w.y1) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("trace on the trivial case") {
  const GridProblem p = radial_problem(RadialCase::Trivial, 0.5, 101);
  const GridSolution s = fmm_solve(p);
  const double h = p.grid.h;

  const TrajectoryPath path = trace(s, p, 1.5, 0.0);
  REQUIRE(path.ok());
  CHECK(std::hypot(path.points.back().x, path.points.back().y) <= 1e-12);
  for (const auto& pt : path.points) CHECK(std::abs(pt.y) <= 2 * h);
  for (std::size_t k = 1; k < path.points.size(); ++k) {
    CHECK(path.points[k].value <= path.points[k - 1].value + h * h);
  }

  SUBCASE("diagonal start stays near the diagonal") {
    const TrajectoryPath d = trace(s, p, 1.2, 1.2);
    REQUIRE(d.ok());
    CHECK(std::hypot(d.points.back().x, d.points.back().y) <= 1e-12);
    for (const auto& pt : d.points) CHECK(std::abs(pt.x - pt.y) / std::sqrt(2.0) <= 2 * h);
  }
  SUBCASE("starting at the origin") {
    const TrajectoryPath o = trace(s, p, 0.0, 0.0);
    CHECK(o.status == TraceStatus::Motionless);
    CHECK(o.points.size() == 1);
  }
  SUBCASE("step budget") {
    TraceOptions opts;
    opts.max_steps = 3;
    const TrajectoryPath t = trace(s, p, 1.5, 0.0, opts);
    CHECK(t.status == TraceStatus::MaxSteps);
    CHECK_FALSE(t.ok());
    CHECK(t.points.size() == 4);
    CHECK(t.points.back().x == doctest::Approx(1.5 - 1.5 * h));
  }
  SUBCASE("bad starts") {
    CHECK_THROWS_AS(trace(s, p, 2.5, 0.0), std::invalid_argument);
  }
}

TEST_CASE("trace on the circular case") {
  const double lambda = 0.5;
  const GridProblem p = radial_problem(RadialCase::Circular, lambda, 101);
  const GridSolution s = fmm_solve(p);
  const double h = p.grid.h;
  const double r = free_boundary_radius(lambda);

  SUBCASE("outside the free boundary nothing moves") {
    const TrajectoryPath o = trace(s, p, 0.0, r + 0.1);
    CHECK(o.status == TraceStatus::Motionless);
    CHECK(o.points.size() == 1);
  }
  SUBCASE("inside, the path runs straight to the origin") {
    const double x0 = 1.0;
    const double y0 = 0.5;
    const TrajectoryPath in = trace(s, p, x0, y0);
    REQUIRE(in.ok());
    CHECK(std::hypot(in.points.back().x, in.points.back().y) <= 1e-12);
    const double n = std::hypot(x0, y0);
    for (const auto& pt : in.points) CHECK(std::abs(pt.x * y0 - pt.y * x0) / n <= 2 * h);
  }
}

TEST_CASE("trace through the maze") {
  ScenarioOverrides o;
  o.rate = 0.01;
  const auto sc = read_grid_scenario(std::string(UHP_SCENARIO_DIR) + "/maze.json", o);
  const GridSolution s = fmm_solve(sc.problem);
  const TrajectoryPath path = trace(s, sc.problem, 5.0, 5.0);
  REQUIRE(path.ok());
  const auto& end = path.points.back();
  CHECK(std::hypot(end.x - 9.0, end.y - 0.1) <= 3 * sc.problem.grid.h);
  for (const auto& pt : path.points) CHECK_FALSE(inside_wall(pt.x, pt.y));
}
