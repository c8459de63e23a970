#ifndef UHP_GRID_HPP_
#define UHP_GRID_HPP_

#include <array>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace uhp {

using Field = std::vector<double>;

/// Uniform Cartesian grid. Point (i, j) sits at (x0 + i h, y0 + j h) and is
/// stored row-major: index = j * nx + i.
struct Grid2D {
  std::size_t nx = 2;
  std::size_t ny = 2;
  double h = 1.0;
  double x0 = 0.0;
  double y0 = 0.0;

  /// n x n grid covering [lo, hi]^2.
  static Grid2D square(std::size_t n, double lo, double hi);

  /// Throws std::invalid_argument unless nx, ny >= 2 and h > 0.
  void check() const;

  std::size_t size() const { return nx * ny; }
  std::size_t index(std::size_t i, std::size_t j) const { return j * nx + i; }
  std::size_t col(std::size_t idx) const { return idx % nx; }
  std::size_t row(std::size_t idx) const { return idx / nx; }
  double x(std::size_t i) const { return x0 + static_cast<double>(i) * h; }
  double y(std::size_t j) const { return y0 + static_cast<double>(j) * h; }
  double x_max() const { return x(nx - 1); }
  double y_max() const { return y(ny - 1); }

  bool contains(double px, double py) const;

  /// Nearest gridpoint, clamped to the grid.
  std::size_t nearest(double px, double py) const;
};

inline constexpr std::size_t kNoNeighbor = std::numeric_limits<std::size_t>::max();

/// Neighbors in the order east (i+1), north (j+1), west (i-1), south (j-1).
/// Missing ones are kNoNeighbor.
std::array<std::size_t, 4> neighbors(const Grid2D& grid, std::size_t idx);

/// Isotropic randomly-terminated problem on a grid. Points with q = +inf are
/// outside the domain.
struct GridProblem {
  Grid2D grid;
  Field speed;          // f > 0
  Field running_cost;   // K >= 0
  Field terminal_cost;  // q
  Field rate;           // lambda > 0

  bool masked(std::size_t idx) const;

  /// Throws std::invalid_argument on size mismatch or out-of-range values.
  void check() const;
};

/// Builds a problem with constant f, K, lambda fields.
GridProblem make_problem(const Grid2D& grid, Field terminal_cost, double speed,
                         double running_cost, double rate);

inline constexpr std::size_t kNeverAccepted = std::numeric_limits<std::size_t>::max();

struct GridStats {
  std::size_t heap_pushes = 0;
  std::size_t heap_pops = 0;
  std::size_t value_updates = 0;  // strict decreases of a value
  std::size_t sweeps = 0;
  bool converged = true;
  double last_change = 0.0;
};

struct GridSolution {
  Grid2D grid;
  Field value;
  std::vector<std::size_t> acceptance_rank;   // per point; kNeverAccepted if not accepted
  std::vector<std::size_t> acceptance_order;  // accepted point indices
  GridStats stats;
};

/// Points with q - V <= eps and the free boundary: masked points with at
/// least one unmasked 4-neighbor inside the domain.
struct MotionlessSet {
  std::vector<char> mask;
  std::vector<std::size_t> boundary;
  double eps = 0.0;
};

/// Bilinear interpolation of a field, ignoring non-finite corners (their
/// weight is redistributed). +inf when every corner is non-finite.
double interpolate(const Grid2D& grid, const Field& field, double px, double py);

}  // namespace uhp

#endif  // UHP_GRID_HPP_
