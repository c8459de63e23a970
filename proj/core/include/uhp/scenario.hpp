#ifndef UHP_SCENARIO_HPP_
#define UHP_SCENARIO_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uhp/eikonal.hpp"
#include "uhp/grid.hpp"

namespace uhp {

struct ScenarioOverrides {
  std::optional<std::size_t> nx;
  std::optional<std::size_t> ny;
  std::optional<double> rate;
};

struct GridScenario {
  std::string name;
  GridProblem problem;
  std::vector<CallPoint> calls;  // empty when q is given directly
};

/// JSON grid scenario:
///
///   {
///     "name": "...",
///     "grid": {"nx": 101, "ny": 101, "bounds": [x0, x1, y0, y1]},
///     "lambda": FIELD, "speed": FIELD, "running_cost": FIELD,
///     "terminal_cost": FIELD,            // or "calls": [{"x", "y", "p"}]
///     "mask": FIELD                      // optional, > 0.5 is outside
///   }
///
/// FIELD is a number, "inf", {"constant": v}, {"csv": "file"} (relative to
/// the scenario file), {"radial": {"center": [x, y], "pieces": [{"until": r,
/// "a": a, "b": b}, ...]}} giving a + b |x - center| on the first piece with
/// |x - center| < until (a missing "until" never ends), or {"rects":
/// {"default": v, "rects": [{"x": [a, b], "y": [c, d], "value": v}]}} where
/// later rectangles win. With "calls", q is the expected travel time to the
/// caller. Throws ParseError on malformed input.
GridScenario parse_grid_scenario(std::string_view json_text,
                                 const std::filesystem::path& base_dir = {},
                                 const ScenarioOverrides& overrides = {});

GridScenario read_grid_scenario(const std::filesystem::path& path,
                                const ScenarioOverrides& overrides = {});

}  // namespace uhp

#endif  // UHP_SCENARIO_HPP_
