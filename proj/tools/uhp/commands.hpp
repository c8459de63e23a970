#ifndef UHP_TOOLS_COMMANDS_HPP_
#define UHP_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace uhp::cli {

struct GraphArgs {
  std::filesystem::path input;
  std::string solver = "dijkstra";  // dijkstra | dial | vi
  std::optional<double> p;
  std::optional<double> tol;
  std::optional<std::filesystem::path> out;  // stdout/stderr when unset
};

struct IdleArgs {
  std::filesystem::path input;
  std::string solver = "dijkstra";
  std::optional<double> lambda;
  std::optional<double> tol;
  std::optional<std::filesystem::path> out;
};

struct GridArgs {
  std::filesystem::path input;
  std::string solver = "fmm";  // fmm | sweep
  std::optional<double> lambda;
  std::optional<std::string> grid;  // NxN
  std::string emit = "value";
  std::optional<double> tol;
  std::optional<double> eps;
  std::size_t max_sweeps = 100'000;
  std::filesystem::path out = ".";
};

struct ConvergenceArgs {
  std::string radial_case = "trivial";
  double lambda = 0.5;
  std::string grids = "101,201,401";
  std::optional<std::string> q;  // analytic | eikonal
  std::string solver = "fmm";
  std::optional<std::filesystem::path> out;
};

struct RandomGraphArgs {
  std::uint64_t seed = 1;
  std::size_t nodes = 100;
  std::size_t degree = 8;
  std::optional<double> p;
  double min_cost = 0.1;
  std::optional<std::filesystem::path> out;
};

int run_graph(const GraphArgs& args);
int run_idle(const IdleArgs& args);
int run_grid(const GridArgs& args);
int run_convergence(const ConvergenceArgs& args);
int run_random_graph(const RandomGraphArgs& args);

/// Splits the --emit list. "trajectory:x,y" keeps its comma.
std::vector<std::string> split_emit(const std::string& list);

}  // namespace uhp::cli

#endif  // UHP_TOOLS_COMMANDS_HPP_
