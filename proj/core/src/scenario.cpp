#include "uhp/scenario.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "uhp/csv.hpp"

namespace uhp {

namespace {

using nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void fail(const std::string& what) { throw ParseError(0, "scenario: " + what); }

double number(const json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      return parse_double(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  fail(where + " must be a number");
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where + " needs \"" + key + "\"");
  return j.at(key);
}

std::pair<double, double> interval(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(where + " must be [lo, hi]");
  return {number(j[0], where), number(j[1], where)};
}

Field build_field(const json& spec, const Grid2D& grid, const std::filesystem::path& base,
                  const std::string& name) {
  const std::size_t n = grid.size();
  if (spec.is_number() || spec.is_string()) return Field(n, number(spec, name));
  if (!spec.is_object() || spec.size() != 1) fail(name + ": expected a number or a one-key object");

  const auto& [kind, body] = *spec.items().begin();
  if (kind == "constant") return Field(n, number(body, name));
  if (kind == "csv") {
    if (!body.is_string()) fail(name + ": csv needs a file name");
    return read_field_csv(base / body.get<std::string>(), grid.nx, grid.ny);
  }
  Field out(n);
  if (kind == "radial") {
    const auto [cx, cy] = interval(member(body, "center", name), name + ".center");
    const json& pieces = member(body, "pieces", name);
    if (!pieces.is_array() || pieces.empty()) fail(name + ": radial needs pieces");
    struct Piece {
      double until, a, b;
    };
    std::vector<Piece> ps;
    for (const auto& p : pieces) {
      ps.push_back({p.contains("until") ? number(p["until"], name) : kInf,
                    p.contains("a") ? number(p["a"], name) : 0.0,
                    p.contains("b") ? number(p["b"], name) : 0.0});
    }
    for (std::size_t j = 0; j < grid.ny; ++j) {
      for (std::size_t i = 0; i < grid.nx; ++i) {
        const double r = std::hypot(grid.x(i) - cx, grid.y(j) - cy);
        double v = std::numeric_limits<double>::quiet_NaN();
        for (const auto& p : ps) {
          if (r < p.until) {
            v = p.a + p.b * r;
            break;
          }
        }
        if (std::isnan(v)) fail(name + ": radial pieces do not cover radius " + format_double(r));
        out[grid.index(i, j)] = v;
      }
    }
    return out;
  }
  if (kind == "rects") {
    out.assign(n, number(member(body, "default", name), name + ".default"));
    const json& rects = member(body, "rects", name);
    if (!rects.is_array()) fail(name + ": rects must be a list");
    const double tol = 1e-9 * grid.h;
    for (const auto& r : rects) {
      const auto [xa, xb] = interval(member(r, "x", name), name + ".x");
      const auto [ya, yb] = interval(member(r, "y", name), name + ".y");
      const double v = number(member(r, "value", name), name + ".value");
      for (std::size_t j = 0; j < grid.ny; ++j) {
        for (std::size_t i = 0; i < grid.nx; ++i) {
          const double x = grid.x(i);
          const double y = grid.y(j);
          if (x >= xa - tol && x <= xb + tol && y >= ya - tol && y <= yb + tol) {
            out[grid.index(i, j)] = v;
          }
        }
      }
    }
    return out;
  }
  fail(name + ": unknown field kind \"" + kind + "\"");
}

Grid2D build_grid(const json& g, const ScenarioOverrides& o) {
  const auto& bounds = member(g, "bounds", "grid");
  if (!bounds.is_array() || bounds.size() != 4) fail("grid.bounds must be [x0, x1, y0, y1]");
  const double x0 = number(bounds[0], "grid.bounds");
  const double x1 = number(bounds[1], "grid.bounds");
  const double y0 = number(bounds[2], "grid.bounds");
  const double y1 = number(bounds[3], "grid.bounds");
  auto count = [&](const char* key, std::optional<std::size_t> over) -> std::size_t {
    if (over) return *over;
    const double v = number(member(g, key, "grid"), std::string("grid.") + key);
    if (!(v >= 2) || v != std::floor(v)) fail(std::string("grid.") + key + " must be an integer >= 2");
    return static_cast<std::size_t>(v);
  };
  Grid2D grid;
  grid.nx = count("nx", o.nx);
  grid.ny = count("ny", o.ny);
  if (grid.nx < 2 || grid.ny < 2) fail("grid needs at least 2 points per axis");
  if (!(x1 > x0) || !(y1 > y0)) fail("grid.bounds must be increasing");
  grid.x0 = x0;
  grid.y0 = y0;
  grid.h = (x1 - x0) / static_cast<double>(grid.nx - 1);
  const double hy = (y1 - y0) / static_cast<double>(grid.ny - 1);
  if (std::abs(hy - grid.h) > 1e-9 * grid.h) {
    fail("grid spacing differs between axes (" + format_double(grid.h) + " vs " +
         format_double(hy) + ")");
  }
  return grid;
}

}  // namespace

GridScenario parse_grid_scenario(std::string_view json_text, const std::filesystem::path& base_dir,
                                 const ScenarioOverrides& overrides) {
  json doc;
  try {
    doc = json::parse(json_text, nullptr, true, true);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("top level must be an object");

  GridScenario s;
  s.name = doc.value("name", std::string("scenario"));
  GridProblem& p = s.problem;
  p.grid = build_grid(member(doc, "grid", "scenario"), overrides);
  const Grid2D& grid = p.grid;

  p.speed = doc.contains("speed") ? build_field(doc["speed"], grid, base_dir, "speed")
                                  : Field(grid.size(), 1.0);
  p.running_cost = doc.contains("running_cost")
                       ? build_field(doc["running_cost"], grid, base_dir, "running_cost")
                       : Field(grid.size(), 0.0);
  if (overrides.rate) {
    p.rate.assign(grid.size(), *overrides.rate);
  } else {
    p.rate = build_field(member(doc, "lambda", "scenario"), grid, base_dir, "lambda");
  }

  std::vector<char> blocked;
  if (doc.contains("mask")) {
    const Field m = build_field(doc["mask"], grid, base_dir, "mask");
    blocked.resize(grid.size());
    for (std::size_t k = 0; k < m.size(); ++k) blocked[k] = m[k] > 0.5 ? 1 : 0;
  }

  const bool has_q = doc.contains("terminal_cost");
  const bool has_calls = doc.contains("calls");
  if (has_q == has_calls) fail("give exactly one of \"terminal_cost\" and \"calls\"");
  try {
    if (has_q) {
      p.terminal_cost = build_field(doc["terminal_cost"], grid, base_dir, "terminal_cost");
      for (std::size_t k = 0; k < blocked.size(); ++k) {
        if (blocked[k]) p.terminal_cost[k] = kInf;
      }
    } else {
      if (!doc["calls"].is_array()) fail("calls must be a list");
      for (const auto& c : doc["calls"]) {
        s.calls.push_back({number(member(c, "x", "call"), "call.x"),
                           number(member(c, "y", "call"), "call.y"),
                           number(member(c, "p", "call"), "call.p")});
      }
      p.terminal_cost = response_cost(grid, p.speed, s.calls, blocked);
    }
    p.check();
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  return s;
}

GridScenario read_grid_scenario(const std::filesystem::path& path,
                                const ScenarioOverrides& overrides) {
  return parse_grid_scenario(read_text_file(path), path.parent_path(), overrides);
}

}  // namespace uhp
