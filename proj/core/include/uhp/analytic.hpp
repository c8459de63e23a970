#ifndef UHP_ANALYTIC_HPP_
#define UHP_ANALYTIC_HPP_

#include <cstddef>
#include <string_view>

#include "uhp/grid.hpp"

namespace uhp {

/// Radially symmetric test problems on [-2, 2]^2 with f = 1 and q = |x|.
/// Trivial: K = 0. Circular: K = |x|.
enum class RadialCase { Trivial, Circular };

RadialCase parse_radial_case(std::string_view name);
std::string_view radial_case_name(RadialCase c);

/// Closed-form value at distance r = |x| from the origin.
///   trivial:  r - (1 - e^{-lambda r}) / lambda
///   circular: min(r, ((lambda + 1) / lambda) (r - (1 - e^{-lambda r}) / lambda))
double exact_value(RadialCase c, double lambda, double r);
double exact_value(RadialCase c, double lambda, double x, double y);

/// Positive root of ((lambda + 1) / lambda) (r - (1 - e^{-lambda r}) / lambda) = r,
/// bracketed in [0.5, 2.5]: bisection followed by Newton polishing to 1e-12.
/// Throws std::domain_error if the bracket does not hold.
double free_boundary_radius(double lambda);

/// How q = |x| is put on the grid: sampled exactly, or as the Fast
/// Marching travel time from the origin (a single caller at the origin).
enum class TerminalCostSource { Analytic, Eikonal };

TerminalCostSource parse_terminal_cost_source(std::string_view name);
std::string_view terminal_cost_source_name(TerminalCostSource s);

/// Eikonal for the trivial case, Analytic for the circular one. These are
/// the settings under which the reference error tables were produced.
TerminalCostSource default_terminal_cost_source(RadialCase c);

/// The discretized problem for a case on an n x n grid over [-2, 2]^2.
GridProblem radial_problem(RadialCase c, double lambda, std::size_t n,
                           TerminalCostSource source);
inline GridProblem radial_problem(RadialCase c, double lambda, std::size_t n) {
  return radial_problem(c, lambda, n, default_terminal_cost_source(c));
}

/// Exact value sampled on a grid.
Field exact_field(RadialCase c, double lambda, const Grid2D& grid);

struct ErrorNorms {
  double line_linf = 0.0;  // max error on the gridline through y = 0
  double l2 = 0.0;         // sqrt(h^2 sum e^2) / area
  double linf = 0.0;       // max error over unmasked points
};

/// Error norms of `value` against `exact`. Points where `exact` is not
/// finite are skipped. The line norm uses the row nearest to y = 0.
ErrorNorms error_norms(const Grid2D& grid, const Field& value, const Field& exact);

}  // namespace uhp

#endif  // UHP_ANALYTIC_HPP_
