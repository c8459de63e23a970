#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "report.hpp"
#include "uhp/csv.hpp"
#include "uhp/graph_solvers.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace uhp::cli;

std::string_view assumption_name(uhp::Assumption a) {
  switch (a) {
    case uhp::Assumption::SelfTransition: return "self_transition";
    case uhp::Assumption::ZeroSelfCost: return "zero_self_cost";
    case uhp::Assumption::CostLowerBound: return "cost_lower_bound";
    case uhp::Assumption::Probability: return "probability";
    case uhp::Assumption::TerminalCost: return "terminal_cost";
  }
  return "unknown";
}

int report(int code, const std::string& kind, const std::string& message, json extra = {}) {
  json err;
  err["error"] = kind;
  err["message"] = message;
  for (auto& [k, v] : extra.items()) err[k] = v;
  std::cerr << err.dump(2) << "\n";
  return code;
}

template <class F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const uhp::ValidationError& e) {
    json violations = json::array();
    for (const auto& v : e.violations) {
      json item{{"assumption", assumption_name(v.kind)}, {"node", v.node}};
      if (v.target) item["target"] = *v.target;
      item["message"] = v.message;
      violations.push_back(item);
    }
    return report(kInvalid, "validation", e.what(), {{"violations", violations}});
  } catch (const uhp::ParseError& e) {
    json extra;
    if (e.line > 0) extra["line"] = e.line;
    return report(kInvalid, "parse", e.what(), extra);
  } catch (const NotConverged& e) {
    return report(kNotConverged, "nonconvergence", e.what(), e.details);
  } catch (const uhp::IoError& e) {
    return report(kIo, "io", e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return report(kIo, "io", e.what());
  } catch (const std::invalid_argument& e) {
    return report(kInvalid, "validation", e.what());
  } catch (const std::domain_error& e) {
    return report(kInvalid, "validation", e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomly-terminated control problems on graphs and grids"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "uhp " + commit_id());

  GraphArgs graph;
  auto* g = app.add_subcommand("graph", "Solve a graph scenario");
  g->add_option("file", graph.input, "graph file")->required();
  g->add_option("--solver", graph.solver, "dijkstra, dial or vi")->capture_default_str();
  g->add_option("--p", graph.p, "termination probability for every transition");
  g->add_option("--tol", graph.tol, "value iteration tolerance");
  g->add_option("--out", graph.out, "output directory (stdout/stderr otherwise)");

  IdleArgs idle;
  auto* i = app.add_subcommand("idle", "Optimal idling of a single responder on a road graph");
  i->add_option("file", idle.input, "idle scenario file")->required();
  i->add_option("--solver", idle.solver, "dijkstra, dial or vi")->capture_default_str();
  i->add_option("--lambda", idle.lambda, "call rate override");
  i->add_option("--tol", idle.tol, "value iteration tolerance");
  i->add_option("--out", idle.out, "output directory (stdout/stderr otherwise)");

  GridArgs grid;
  auto* r = app.add_subcommand("grid", "Solve a grid scenario");
  r->add_option("file", grid.input, "scenario JSON")->required();
  r->add_option("--solver", grid.solver, "fmm or sweep")->capture_default_str();
  r->add_option("--lambda", grid.lambda, "constant termination rate override");
  r->add_option("--grid", grid.grid, "resample to NxN");
  r->add_option("--emit", grid.emit, "value,mask,boundary,trajectory:x,y")->capture_default_str();
  r->add_option("--tol", grid.tol, "sweep tolerance");
  r->add_option("--max-sweeps", grid.max_sweeps, "sweep budget")->capture_default_str();
  r->add_option("--eps", grid.eps, "motionless tolerance on q - V");
  r->add_option("--out", grid.out, "output directory")->capture_default_str();

  ConvergenceArgs conv;
  auto* c = app.add_subcommand("convergence", "Error table for the radial test problems");
  c->add_option("--case", conv.radial_case, "trivial or circular")->capture_default_str();
  c->add_option("--lambda", conv.lambda, "termination rate")->capture_default_str();
  c->add_option("--grids", conv.grids, "comma-separated grid sizes")->capture_default_str();
  c->add_option("--q", conv.q, "analytic or eikonal terminal cost");
  c->add_option("--solver", conv.solver, "fmm or sweep")->capture_default_str();
  c->add_option("--out", conv.out, "output directory (stdout/stderr otherwise)");

  RandomGraphArgs rnd;
  auto* n = app.add_subcommand("random-graph", "Write a random graph satisfying the label-setting assumptions");
  n->add_option("--seed", rnd.seed)->capture_default_str();
  n->add_option("--nodes", rnd.nodes)->capture_default_str();
  n->add_option("--degree", rnd.degree, "max out-degree, self-loop included")->capture_default_str();
  n->add_option("--p", rnd.p, "one termination probability for every transition");
  n->add_option("--min-cost", rnd.min_cost)->capture_default_str();
  n->add_option("--out", rnd.out, "output file (stdout otherwise)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  if (*g) return guarded([&] { return run_graph(graph); });
  if (*i) return guarded([&] { return run_idle(idle); });
  if (*r) return guarded([&] { return run_grid(grid); });
  if (*c) return guarded([&] { return run_convergence(conv); });
  return guarded([&] { return run_random_graph(rnd); });
}
