#include "uhp/local_update.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>

namespace uhp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double one_sided_update(double v1, const PointData& p) {
  if (v1 == kInf) return kInf;
  const double lh = p.rate * p.h;
  return (p.h * p.running_cost + lh * p.terminal_cost + p.speed * v1) / (lh + p.speed);
}

double quadrant_update(double v1, double v2, const PointData& p) {
  const double lo = std::min(v1, v2);
  const double hi = std::max(v1, v2);
  if (hi == kInf) return one_sided_update(lo, p);

  // Shift to w = V - lo so that the coefficients stay O(1) when V is large.
  const double delta = hi - lo;
  const double a = (p.speed * p.speed) / (p.h * p.h);
  const double c = p.running_cost + p.rate * (p.terminal_cost - lo);
  const double lam = p.rate;
  const double qa = 2.0 * a - lam * lam;
  const double qb = -2.0 * a * delta + 2.0 * c * lam;
  const double qc = a * delta * delta - c * c;

  double roots[2];
  int count = 0;
  if (qa == 0.0) {
    if (qb != 0.0) roots[count++] = -qc / qb;
  } else {
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc >= 0.0) {
      const double s = std::sqrt(disc);
      const double t = -0.5 * (qb + std::copysign(s, qb));
      if (t != 0.0) {
        roots[count++] = t / qa;
        roots[count++] = qc / t;
      } else {
        roots[count++] = 0.0;
      }
    }
  }

  double best = kInf;
  for (int k = 0; k < count; ++k) {
    const double w = roots[k];
    if (w >= delta && c - lam * w >= 0.0) best = std::min(best, w);
  }
  if (best < kInf) return lo + best;
  return one_sided_update(lo, p);
}

double node_update(const std::array<double, 4>& nb, const PointData& p) {
  double v = p.terminal_cost;
  for (int k = 0; k < 4; ++k) {
    v = std::min(v, quadrant_update(nb[k], nb[(k + 1) % 4], p));
  }
  return v;
}

double update_residual(double value, const std::array<double, 4>& nb, const PointData& p) {
  // V = q + (1/lambda) [K - f |D V|]^- with one-sided upwind differences.
  const double ax = std::min(nb[0], nb[2]);
  const double ay = std::min(nb[1], nb[3]);
  const double dx = ax == kInf ? 0.0 : std::max(value - ax, 0.0) / p.h;
  const double dy = ay == kInf ? 0.0 : std::max(value - ay, 0.0) / p.h;
  const double hamiltonian = p.running_cost - p.speed * std::sqrt(dx * dx + dy * dy);
  return std::abs(value - p.terminal_cost - std::min(hamiltonian, 0.0) / p.rate);
}

SemiLagrangianResult semi_lagrangian_minimize(double v1, double v2, const PointData& p) {
  if (v1 == kInf && v2 == kInf) return {kInf, 0.5, false};
  if (v2 == kInf) return {one_sided_update(v1, p), 1.0, false};
  if (v1 == kInf) return {one_sided_update(v2, p), 0.0, false};

  const double source = p.running_cost + p.rate * p.terminal_cost;
  const double step = p.h / p.speed;
  auto cost = [&](double xi1) {
    const double xi2 = 1.0 - xi1;
    const double tau = step * std::sqrt(xi1 * xi1 + xi2 * xi2);
    return (source * tau + xi1 * v1 + xi2 * v2) / (1.0 + p.rate * tau);
  };

  constexpr int kScan = 128;
  int best_k = 0;
  double best = cost(0.0);
  for (int k = 1; k <= kScan; ++k) {
    const double c = cost(static_cast<double>(k) / kScan);
    if (c < best) {
      best = c;
      best_k = k;
    }
  }
  const double lo = std::max(0.0, static_cast<double>(best_k - 1) / kScan);
  const double hi = std::min(1.0, static_cast<double>(best_k + 1) / kScan);
  const auto [xi, c] = boost::math::tools::brent_find_minima(cost, lo, hi,
                                                             std::numeric_limits<double>::digits);
  SemiLagrangianResult r{best, static_cast<double>(best_k) / kScan, false};
  if (c < r.value) {
    r.value = c;
    r.xi1 = xi;
  }
  for (const double end : {0.0, 1.0}) {
    const double ce = cost(end);
    if (ce <= r.value) {
      r.value = ce;
      r.xi1 = end;
    }
  }
  r.interior = r.xi1 > 0.0 && r.xi1 < 1.0;
  return r;
}

}  // namespace uhp
