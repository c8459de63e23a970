#include "uhp/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "uhp/eikonal.hpp"

namespace uhp {

namespace {

// r - (1 - e^{-lambda r}) / lambda, accurate for small lambda r.
double discounted_gap(double lambda, double r) {
  return r + std::expm1(-lambda * r) / lambda;
}

}  // namespace

RadialCase parse_radial_case(std::string_view name) {
  if (name == "trivial") return RadialCase::Trivial;
  if (name == "circular") return RadialCase::Circular;
  throw std::invalid_argument("unknown case '" + std::string(name) + "'");
}

std::string_view radial_case_name(RadialCase c) {
  return c == RadialCase::Trivial ? "trivial" : "circular";
}

double exact_value(RadialCase c, double lambda, double r) {
  const double v = discounted_gap(lambda, r);
  if (c == RadialCase::Trivial) return v;
  return std::min(r, (lambda + 1.0) / lambda * v);
}

double exact_value(RadialCase c, double lambda, double x, double y) {
  return exact_value(c, lambda, std::hypot(x, y));
}

double free_boundary_radius(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::domain_error("free_boundary_radius needs lambda > 0");
  }
  const double scale = (lambda + 1.0) / lambda;
  auto g = [&](double r) { return scale * discounted_gap(lambda, r) - r; };
  // g' = scale (1 - e^{-lambda r}) - 1
  auto dg = [&](double r) { return -scale * std::expm1(-lambda * r) - 1.0; };

  double lo = 0.5;
  double hi = 2.5;
  if (!(g(lo) < 0.0 && g(hi) > 0.0)) {
    throw std::domain_error("free boundary root not bracketed in [0.5, 2.5]");
  }
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  double r = 0.5 * (lo + hi);
  for (int it = 0; it < 50; ++it) {
    const double step = g(r) / dg(r);
    const double next = std::clamp(r - step, lo - 1e-6, hi + 1e-6);
    const bool done = std::abs(next - r) <= 1e-14;
    r = next;
    if (done) break;
  }
  return r;
}

TerminalCostSource parse_terminal_cost_source(std::string_view name) {
  if (name == "analytic") return TerminalCostSource::Analytic;
  if (name == "eikonal") return TerminalCostSource::Eikonal;
  throw std::invalid_argument("unknown terminal cost source '" + std::string(name) + "'");
}

std::string_view terminal_cost_source_name(TerminalCostSource s) {
  return s == TerminalCostSource::Analytic ? "analytic" : "eikonal";
}

TerminalCostSource default_terminal_cost_source(RadialCase c) {
  return c == RadialCase::Trivial ? TerminalCostSource::Eikonal : TerminalCostSource::Analytic;
}

GridProblem radial_problem(RadialCase c, double lambda, std::size_t n,
                           TerminalCostSource source) {
  const Grid2D grid = Grid2D::square(n, -2.0, 2.0);
  Field radius(grid.size());
  for (std::size_t j = 0; j < grid.ny; ++j) {
    for (std::size_t i = 0; i < grid.nx; ++i) {
      radius[grid.index(i, j)] = std::hypot(grid.x(i), grid.y(j));
    }
  }
  Field q = radius;
  if (source == TerminalCostSource::Eikonal) {
    q = eikonal_solve(grid, Field(grid.size(), 1.0), grid.nearest(0.0, 0.0));
  }
  GridProblem p = make_problem(grid, std::move(q), 1.0, 0.0, lambda);
  if (c == RadialCase::Circular) p.running_cost = std::move(radius);
  return p;
}

Field exact_field(RadialCase c, double lambda, const Grid2D& grid) {
  Field v(grid.size());
  for (std::size_t j = 0; j < grid.ny; ++j) {
    for (std::size_t i = 0; i < grid.nx; ++i) {
      v[grid.index(i, j)] = exact_value(c, lambda, grid.x(i), grid.y(j));
    }
  }
  return v;
}

ErrorNorms error_norms(const Grid2D& grid, const Field& value, const Field& exact) {
  if (value.size() != grid.size() || exact.size() != grid.size()) {
    throw std::invalid_argument("error_norms: field size does not match the grid");
  }
  ErrorNorms e;
  double sum_sq = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!std::isfinite(exact[k])) continue;
    const double err = std::abs(value[k] - exact[k]);
    e.linf = std::max(e.linf, err);
    sum_sq += err * err;
  }
  const double h = grid.h;
  const double area = static_cast<double>(grid.nx - 1) * static_cast<double>(grid.ny - 1) * h * h;
  e.l2 = std::sqrt(h * h * sum_sq) / area;

  const double row = std::clamp(std::round(-grid.y0 / h), 0.0, static_cast<double>(grid.ny - 1));
  const auto j = static_cast<std::size_t>(row);
  for (std::size_t i = 0; i < grid.nx; ++i) {
    const std::size_t k = grid.index(i, j);
    if (!std::isfinite(exact[k])) continue;
    e.line_linf = std::max(e.line_linf, std::abs(value[k] - exact[k]));
  }
  return e;
}

}  // namespace uhp
