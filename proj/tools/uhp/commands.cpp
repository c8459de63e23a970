#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "report.hpp"
#include "uhp/analytic.hpp"
#include "uhp/csv.hpp"
#include "uhp/graph_io.hpp"
#include "uhp/graph_solvers.hpp"
#include "uhp/grid_solvers.hpp"
#include "uhp/idle_time.hpp"
#include "uhp/random_graph.hpp"
#include "uhp/scenario.hpp"
#include "uhp/trajectory.hpp"

namespace uhp::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string opt_string(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string("default");
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

void emit_summary(const json& summary, const std::optional<std::filesystem::path>& out) {
  if (out) {
    write_text_file(*out / "summary.json", summary.dump(2) + "\n");
  } else {
    std::cerr << summary.dump(2) << "\n";
  }
}

GraphSolution solve_graph(const GraphProblem& problem, const std::string& solver,
                          const std::optional<double>& tol) {
  if (solver == "dijkstra") return dijkstra_solve(problem);
  if (solver == "dial") return dial_solve(problem);
  if (solver == "vi") {
    ValueIterationOptions opts;
    if (tol) opts.tolerance = *tol;
    auto s = value_iteration(problem, {}, opts);
    if (!s.stats.converged) {
      throw NotConverged("value iteration did not converge",
                         {{"iterations", s.stats.iterations},
                          {"last_change", s.stats.last_change},
                          {"residual", bellman_residual(problem, s.value)}});
    }
    return s;
  }
  throw std::invalid_argument("unknown graph solver '" + solver + "' (dijkstra, dial, vi)");
}

int finish_graph(const std::string& command, const std::string& input_name,
                 const std::string& input, const GraphProblem& problem, const std::string& solver,
                 const std::optional<double>& tol, const std::optional<std::filesystem::path>& out,
                 std::map<std::string, std::string> settings) {
  const auto t0 = Clock::now();
  const GraphSolution s = solve_graph(problem, solver, tol);
  const double wall = seconds_since(t0);

  std::size_t motionless = 0;
  for (const char m : s.motionless) motionless += m != 0;
  json summary;
  summary["command"] = command;
  summary["input"] = input_name;
  summary["solver"] = solver;
  summary["nodes"] = problem.node_count();
  summary["edges"] = problem.edge_count();
  summary["wall_time_s"] = wall;
  summary["heap_pushes"] = s.stats.heap_pushes;
  summary["heap_pops"] = s.stats.heap_pops;
  summary["value_updates"] = s.stats.value_updates;
  if (solver == "vi") summary["iterations"] = s.stats.iterations;
  summary["bellman_residual"] = bellman_residual(problem, s.value);
  summary["motionless_nodes"] = motionless;
  settings["solver"] = solver;
  settings["tol"] = opt_string(tol);
  stamp(summary, command, input, settings);

  const std::string csv = format_solution_csv(problem, s);
  if (out) {
    ensure_dir(*out);
    write_text_file(*out / "solution.csv", csv);
  } else {
    std::cout << csv;
  }
  emit_summary(summary, out);
  return kOk;
}

std::pair<std::size_t, std::size_t> parse_grid_size(const std::string& text) {
  const auto x = text.find_first_of("xX");
  try {
    std::size_t used = 0;
    if (x == std::string::npos) {
      const auto n = std::stoul(text, &used);
      if (used != text.size()) throw std::invalid_argument("");
      return {n, n};
    }
    const auto nx = std::stoul(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument("");
    const auto ny = std::stoul(text.substr(x + 1), &used);
    if (used != text.size() - x - 1) throw std::invalid_argument("");
    return {nx, ny};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("--grid expects NxN, got '" + text + "'");
  }
}

std::vector<std::size_t> parse_grid_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto [nx, ny] = parse_grid_size(tok);
    if (nx != ny) throw std::invalid_argument("convergence grids must be square, got '" + tok + "'");
    out.push_back(nx);
  }
  if (out.empty()) throw std::invalid_argument("empty grid list");
  return out;
}

GridSolution solve_grid(const GridProblem& problem, const std::string& solver,
                        const std::optional<double>& tol, std::size_t max_sweeps) {
  if (solver == "fmm") return fmm_solve(problem);
  if (solver == "sweep") {
    SweepOptions opts;
    if (tol) opts.tolerance = *tol;
    opts.max_sweeps = max_sweeps;
    auto s = sweep_oracle(problem, opts);
    if (!s.stats.converged) {
      throw NotConverged("sweep did not converge",
                         {{"sweeps", s.stats.sweeps},
                          {"last_change", s.stats.last_change},
                          {"max_residual", max_residual(problem, s.value)}});
    }
    return s;
  }
  throw std::invalid_argument("unknown grid solver '" + solver + "' (fmm, sweep)");
}

}  // namespace

std::vector<std::string> split_emit(const std::string& list) {
  std::vector<std::string> parts;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) parts.push_back(tok);
  std::vector<std::string> out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].rfind("trajectory:", 0) == 0) {
      if (k + 1 >= parts.size()) throw std::invalid_argument("trajectory needs x,y: '" + parts[k] + "'");
      out.push_back(parts[k] + "," + parts[k + 1]);
      ++k;
    } else if (!parts[k].empty()) {
      out.push_back(parts[k]);
    }
  }
  return out;
}

int run_graph(const GraphArgs& args) {
  const std::string text = read_text_file(args.input);
  const GraphProblem problem = parse_graph(text, args.p);
  return finish_graph("graph", args.input.string(), text, problem, args.solver, args.tol, args.out,
                      {{"p", opt_string(args.p)}});
}

int run_idle(const IdleArgs& args) {
  const std::string text = read_text_file(args.input);
  IdleScenario scenario = parse_idle_scenario(text);
  if (args.lambda) scenario.call_rate = *args.lambda;
  const GraphProblem problem = build_problem(scenario);
  return finish_graph("idle", args.input.string(), text, problem, args.solver, args.tol, args.out,
                      {{"lambda", format_double(scenario.call_rate)}});
}

int run_grid(const GridArgs& args) {
  const std::string text = read_text_file(args.input);
  ScenarioOverrides overrides;
  if (args.grid) {
    const auto [nx, ny] = parse_grid_size(*args.grid);
    overrides.nx = nx;
    overrides.ny = ny;
  }
  overrides.rate = args.lambda;
  const GridScenario sc = parse_grid_scenario(text, args.input.parent_path(), overrides);
  const GridProblem& problem = sc.problem;
  const Grid2D& g = problem.grid;
  const auto emits = split_emit(args.emit);
  for (const auto& e : emits) {
    if (e != "value" && e != "mask" && e != "boundary" && e.rfind("trajectory:", 0) != 0) {
      throw std::invalid_argument("unknown --emit item '" + e + "' (value, mask, boundary, trajectory:x,y)");
    }
  }

  const auto t0 = Clock::now();
  const GridSolution s = solve_grid(problem, args.solver, args.tol, args.max_sweeps);
  const double wall = seconds_since(t0);
  const MotionlessSet m = motionless_set(s, problem, args.eps);

  ensure_dir(args.out);
  json summary;
  summary["command"] = "grid";
  summary["input"] = args.input.string();
  summary["scenario"] = sc.name;
  summary["solver"] = args.solver;
  summary["grid"] = {{"nx", g.nx}, {"ny", g.ny}, {"h", g.h}};
  summary["wall_time_s"] = wall;
  summary["heap_pushes"] = s.stats.heap_pushes;
  summary["heap_pops"] = s.stats.heap_pops;
  summary["value_updates"] = s.stats.value_updates;
  if (args.solver == "sweep") summary["sweeps"] = s.stats.sweeps;
  summary["max_residual"] = max_residual(problem, s.value);
  summary["motionless_eps"] = m.eps;
  std::size_t motionless = 0;
  for (const char c : m.mask) motionless += c != 0;
  summary["motionless_points"] = motionless;
  summary["boundary_points"] = m.boundary.size();
  json files = json::array();
  json traces = json::array();

  for (const auto& e : emits) {
    if (e == "value") {
      write_field_csv(args.out / "value.csv", s.value, g.nx, g.ny);
      files.push_back("value.csv");
    } else if (e == "mask") {
      Field mask(m.mask.size());
      for (std::size_t k = 0; k < mask.size(); ++k) mask[k] = m.mask[k] ? 1.0 : 0.0;
      write_field_csv(args.out / "mask.csv", mask, g.nx, g.ny);
      files.push_back("mask.csv");
    } else if (e == "boundary") {
      std::string csv = "i,j,x,y\n";
      for (const auto k : m.boundary) {
        csv += std::to_string(g.col(k)) + "," + std::to_string(g.row(k)) + "," +
               format_double(g.x(g.col(k))) + "," + format_double(g.y(g.row(k))) + "\n";
      }
      write_text_file(args.out / "boundary.csv", csv);
      files.push_back("boundary.csv");
    } else {
      const std::string coords = e.substr(std::string("trajectory:").size());
      const auto comma = coords.find(',');
      double x0 = 0.0;
      double y0 = 0.0;
      try {
        x0 = parse_double(coords.substr(0, comma));
        y0 = parse_double(coords.substr(comma + 1));
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad trajectory start '" + coords + "'");
      }
      TraceOptions topts;
      topts.eps = m.eps;
      const TrajectoryPath path = trace(s, problem, x0, y0, topts);
      std::string csv = "x,y,V\n";
      for (const auto& pt : path.points) {
        csv += format_double(pt.x) + "," + format_double(pt.y) + "," + format_double(pt.value) + "\n";
      }
      const std::string name = "trajectory_" + format_double(x0) + "_" + format_double(y0) + ".csv";
      write_text_file(args.out / name, csv);
      files.push_back(name);
      traces.push_back({{"start", {x0, y0}},
                        {"file", name},
                        {"status", std::string(trace_status_name(path.status))},
                        {"points", path.points.size()},
                        {"end", {path.points.back().x, path.points.back().y}}});
    }
  }
  summary["files"] = files;
  if (!traces.empty()) summary["trajectories"] = traces;
  stamp(summary, "grid", text,
        {{"solver", args.solver},
         {"lambda", opt_string(args.lambda)},
         {"grid", args.grid.value_or("default")},
         {"emit", args.emit},
         {"tol", opt_string(args.tol)},
         {"eps", opt_string(args.eps)},
         {"max_sweeps", std::to_string(args.max_sweeps)}});
  emit_summary(summary, args.out);
  return kOk;
}

int run_convergence(const ConvergenceArgs& args) {
  const RadialCase c = parse_radial_case(args.radial_case);
  if (!(args.lambda > 0.0) || !std::isfinite(args.lambda)) {
    throw std::invalid_argument("--lambda must be positive");
  }
  const TerminalCostSource src =
      args.q ? parse_terminal_cost_source(*args.q) : default_terminal_cost_source(c);
  const auto grids = parse_grid_list(args.grids);

  std::string csv = "grid,line_Linf,L2,Linf,order_line_Linf,order_L2,order_Linf\n";
  json rows = json::array();
  const auto t0 = Clock::now();
  ErrorNorms prev;
  double prev_h = 0.0;
  for (std::size_t r = 0; r < grids.size(); ++r) {
    const GridProblem p = radial_problem(c, args.lambda, grids[r], src);
    const GridSolution s = solve_grid(p, args.solver, std::nullopt, 100'000);
    const ErrorNorms e = error_norms(p.grid, s.value, exact_field(c, args.lambda, p.grid));
    auto order = [&](double a, double b) {
      return r == 0 ? std::string() : format_double(std::log(a / b) / std::log(prev_h / p.grid.h));
    };
    csv += std::to_string(grids[r]) + "," + format_double(e.line_linf) + "," + format_double(e.l2) +
           "," + format_double(e.linf) + "," + order(prev.line_linf, e.line_linf) + "," +
           order(prev.l2, e.l2) + "," + order(prev.linf, e.linf) + "\n";
    rows.push_back({{"grid", grids[r]}, {"line_Linf", e.line_linf}, {"L2", e.l2}, {"Linf", e.linf}});
    prev = e;
    prev_h = p.grid.h;
  }

  json summary;
  summary["command"] = "convergence";
  summary["case"] = std::string(radial_case_name(c));
  summary["lambda"] = args.lambda;
  summary["terminal_cost"] = std::string(terminal_cost_source_name(src));
  summary["solver"] = args.solver;
  summary["rows"] = rows;
  summary["wall_time_s"] = seconds_since(t0);
  stamp(summary, "convergence", "",
        {{"case", std::string(radial_case_name(c))},
         {"lambda", format_double(args.lambda)},
         {"grids", args.grids},
         {"q", std::string(terminal_cost_source_name(src))},
         {"solver", args.solver}});
  if (args.out) {
    ensure_dir(*args.out);
    write_text_file(*args.out / "convergence.csv", csv);
  } else {
    std::cout << csv;
  }
  emit_summary(summary, args.out);
  return kOk;
}

int run_random_graph(const RandomGraphArgs& args) {
  RandomGraphOptions opts;
  opts.nodes = args.nodes;
  opts.max_out_degree = args.degree;
  opts.min_cost = args.min_cost;
  opts.seed = args.seed;
  if (args.p) {
    opts.uniform_termination = true;
    opts.min_termination = *args.p;
    opts.max_termination = *args.p;
  }
  const std::string text = format_graph(make_random_problem(opts));
  if (args.out) {
    write_text_file(*args.out, text);
  } else {
    std::cout << text;
  }
  return kOk;
}

}  // namespace uhp::cli
