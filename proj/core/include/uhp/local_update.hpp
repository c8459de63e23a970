#ifndef UHP_LOCAL_UPDATE_HPP_
#define UHP_LOCAL_UPDATE_HPP_

#include <array>

namespace uhp {

/// Data of the gridpoint being updated.
struct PointData {
  double running_cost = 0.0;   // K
  double terminal_cost = 0.0;  // q
  double speed = 1.0;          // f
  double rate = 1.0;           // lambda
  double h = 1.0;
};

/// Update from a single upwind neighbor:
/// V = (h K + lambda h q + f V1) / (lambda h + f).
double one_sided_update(double v1, const PointData& p);

/// Solves f^2 [((V - V1)/h)^2 + ((V - V2)/h)^2] = (K + lambda q - lambda V)^2
/// for the smallest root with V >= max(V1, V2) and K + lambda (q - V) >= 0,
/// falling back to one_sided_update(min(V1, V2)) when there is none.
/// Either neighbor may be +inf.
double quadrant_update(double v1, double v2, const PointData& p);

/// min(q, V12, V23, V34, V41) over the neighbors east, north, west, south.
/// Missing neighbors are +inf.
double node_update(const std::array<double, 4>& nb, const PointData& p);

/// |V - q - (1/lambda) [K - f |D V|]^-| with upwind differences D. Zero when
/// V solves the discretized variational inequality for these neighbors.
double update_residual(double value, const std::array<double, 4>& nb, const PointData& p);

struct SemiLagrangianResult {
  double value;
  double xi1;     // weight of V1; the weight of V2 is 1 - xi1
  bool interior;  // minimizer strictly inside (0, 1)
};

/// min over xi in the unit simplex of
/// [(K + lambda q) tau + xi1 V1 + xi2 V2] / (1 + lambda tau),
/// tau = (h / f) sqrt(xi1^2 + xi2^2).
SemiLagrangianResult semi_lagrangian_minimize(double v1, double v2, const PointData& p);

inline double semi_lagrangian_update(double v1, double v2, const PointData& p) {
  return semi_lagrangian_minimize(v1, v2, p).value;
}

}  // namespace uhp

#endif  // UHP_LOCAL_UPDATE_HPP_
