#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "doctest.h"
#include "uhp/csv.hpp"
#include "uhp/scenario.hpp"

using namespace uhp;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const std::string kSmallGrid = R"("grid": {"nx": 5, "ny": 3, "bounds": [0, 4, 0, 2]})";

std::string scenario(const std::string& body) { return "{" + kSmallGrid + ", " + body + "}"; }

}  // namespace

TEST_CASE("field kinds") {
  SUBCASE("numbers, constants and inf") {
    const auto sc = parse_grid_scenario(scenario(
        R"("lambda": 0.7, "speed": {"constant": 2}, "terminal_cost": 3)"));
    const auto& p = sc.problem;
    CHECK(p.grid.nx == 5);
    CHECK(p.grid.ny == 3);
    CHECK(p.grid.h == 1.0);
    CHECK(p.rate[4] == 0.7);
    CHECK(p.speed[7] == 2.0);
    CHECK(p.running_cost[0] == 0.0);
    CHECK(p.terminal_cost[14] == 3.0);
    CHECK(sc.calls.empty());
  }
  SUBCASE("radial pieces") {
    const auto sc = parse_grid_scenario(scenario(
        R"("lambda": 1, "terminal_cost": {"radial": {"center": [0, 0], "pieces": [
             {"until": 1.5, "a": 0, "b": 1}, {"a": 10, "b": 0}]}})"));
    const auto& q = sc.problem.terminal_cost;
    const auto& g = sc.problem.grid;
    CHECK(q[g.index(0, 0)] == 0.0);
    CHECK(q[g.index(1, 0)] == 1.0);
    CHECK(q[g.index(1, 1)] == doctest::Approx(std::sqrt(2.0)));
    CHECK(q[g.index(2, 0)] == 10.0);
  }
  SUBCASE("rectangles, later ones win") {
    const auto sc = parse_grid_scenario(scenario(
        R"("lambda": 1, "terminal_cost": {"rects": {"default": 1, "rects": [
             {"x": [0.5, 3.5], "y": [-1, 3], "value": 2}, {"x": [1.5, 2.5], "y": [0.5, 1.5], "value": 5}]}})"));
    const auto& q = sc.problem.terminal_cost;
    const auto& g = sc.problem.grid;
    CHECK(q[g.index(0, 1)] == 1.0);
    CHECK(q[g.index(1, 1)] == 2.0);
    CHECK(q[g.index(2, 1)] == 5.0);
    CHECK(q[g.index(2, 0)] == 2.0);
  }
  SUBCASE("csv relative to the scenario directory, and mask") {
    const auto dir = std::filesystem::temp_directory_path() / "uhp_scenario_test";
    std::filesystem::create_directories(dir);
    std::vector<double> v(15);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = static_cast<double>(k);
    write_field_csv(dir / "q.csv", v, 5, 3);
    {
      std::ofstream out(dir / "s.json");
      out << scenario(R"("lambda": 1, "terminal_cost": {"csv": "q.csv"},
                         "mask": {"rects": {"default": 0, "rects": [{"x": [3.5, 5], "y": [-1, 3], "value": 1}]}})");
    }
    const auto sc = read_grid_scenario(dir / "s.json");
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (sc.problem.grid.col(k) == 4) {
        CHECK(sc.problem.terminal_cost[k] == kInf);
        CHECK(sc.problem.masked(k));
      } else {
        CHECK(sc.problem.terminal_cost[k] == v[k]);
      }
    }
    std::filesystem::remove_all(dir);
  }
  SUBCASE("calls give an expected travel time") {
    const auto sc = parse_grid_scenario(scenario(
        R"("lambda": 1, "calls": [{"x": 0, "y": 0, "p": 0.25}, {"x": 4, "y": 0, "p": 0.75}])"));
    REQUIRE(sc.calls.size() == 2);
    const auto& q = sc.problem.terminal_cost;
    CHECK(q[0] == doctest::Approx(3.0));
    CHECK(q[4] == doctest::Approx(1.0));
  }
}

TEST_CASE("overrides") {
  ScenarioOverrides o;
  o.nx = 9;
  o.ny = 5;
  o.rate = 2.5;
  const auto sc = parse_grid_scenario(scenario(R"("lambda": 1, "terminal_cost": 1)"), {}, o);
  CHECK(sc.problem.grid.nx == 9);
  CHECK(sc.problem.grid.ny == 5);
  CHECK(sc.problem.grid.h == 0.5);
  CHECK(sc.problem.rate[0] == 2.5);
}

TEST_CASE("shipped scenarios load") {
  for (const char* name : {"trivial", "trivial_analytic", "circular", "slow_disk", "constant", "maze"}) {
    CAPTURE(name);
    const auto sc = read_grid_scenario(std::string(UHP_SCENARIO_DIR) + "/" + name + ".json");
    CHECK_NOTHROW(sc.problem.check());
    CHECK(sc.problem.grid.size() > 0);
  }
}

TEST_CASE("malformed scenarios") {
  const std::string bad[] = {
      "not json",
      R"({"lambda": 1, "terminal_cost": 1})",
      scenario(R"("terminal_cost": 1)"),
  };
  for (const auto& text : bad) CHECK_THROWS_AS(parse_grid_scenario(text), ParseError);
  const std::string more[] = {
      scenario(R"("lambda": 1)"),
      scenario(R"("lambda": 1, "terminal_cost": 1, "calls": [{"x": 0, "y": 0, "p": 1}])"),
      scenario(R"("lambda": 1, "terminal_cost": {"bogus": 1})"),
      scenario(R"("lambda": 1, "terminal_cost": "many")"),
      scenario(R"("lambda": 1, "terminal_cost": {"csv": "/nonexistent/q.csv"})"),
      scenario(R"("lambda": 1, "calls": [{"x": 0, "y": 0, "p": 0.5}])"),
      R"({"grid": {"nx": 5, "ny": 3, "bounds": [0, 4, 0, 3]}, "lambda": 1, "terminal_cost": 1})",
      R"({"grid": {"nx": 1, "ny": 3, "bounds": [0, 4, 0, 2]}, "lambda": 1, "terminal_cost": 1})",
  };
  for (const auto& text : more) {
    CAPTURE(text);
    CHECK_THROWS(parse_grid_scenario(text));
  }
}
