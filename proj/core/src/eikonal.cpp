#include "uhp/eikonal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

namespace uhp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double rouy_tourin(double a, double b, double step) {
  if (a > b) std::swap(a, b);
  if (a == kInf) return kInf;
  if (b - a >= step) return a + step;
  // (u - a)^2 + (u - b)^2 = step^2
  return 0.5 * (a + b + std::sqrt(2.0 * step * step - (a - b) * (a - b)));
}

}  // namespace

Field eikonal_solve(const Grid2D& grid, const Field& speed, std::size_t source,
                    const std::vector<char>& blocked) {
  grid.check();
  const std::size_t n = grid.size();
  if (speed.size() != n) throw std::invalid_argument("speed field does not match the grid");
  if (!blocked.empty() && blocked.size() != n) {
    throw std::invalid_argument("mask does not match the grid");
  }
  if (source >= n) throw std::invalid_argument("source outside the grid");
  auto is_blocked = [&](std::size_t k) { return !blocked.empty() && blocked[k]; };
  if (is_blocked(source)) throw std::invalid_argument("source lies in a blocked point");

  Field u(n, kInf);
  std::vector<char> accepted(n, 0);
  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  u[source] = 0.0;
  heap.emplace(0.0, source);

  while (!heap.empty()) {
    const auto [val, cur] = heap.top();
    heap.pop();
    if (accepted[cur] || val != u[cur]) continue;
    accepted[cur] = 1;
    for (const auto t : neighbors(grid, cur)) {
      if (t == kNoNeighbor || accepted[t] || is_blocked(t)) continue;
      if (!(speed[t] > 0.0)) throw std::invalid_argument("speed must be positive");
      const auto tn = neighbors(grid, t);
      auto acc = [&](std::size_t k) { return k != kNoNeighbor && accepted[k] ? u[k] : kInf; };
      const double a = std::min(acc(tn[0]), acc(tn[2]));
      const double b = std::min(acc(tn[1]), acc(tn[3]));
      const double cand = rouy_tourin(a, b, grid.h / speed[t]);
      if (cand < u[t]) {
        u[t] = cand;
        heap.emplace(cand, t);
      }
    }
  }
  return u;
}

void check_calls(const Grid2D& grid, const std::vector<CallPoint>& calls) {
  if (calls.empty()) throw std::invalid_argument("no call locations");
  double total = 0.0;
  for (const auto& c : calls) {
    if (!(c.probability >= 0.0)) throw std::invalid_argument("negative call probability");
    if (!grid.contains(c.x, c.y)) throw std::invalid_argument("call location outside the grid");
    total += c.probability;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("call probabilities must sum to 1");
  }
}

Field response_cost(const Grid2D& grid, const Field& speed, const std::vector<CallPoint>& calls,
                    const std::vector<char>& blocked) {
  check_calls(grid, calls);
  Field q(grid.size(), 0.0);
  for (const auto& c : calls) {
    if (c.probability == 0.0) continue;
    const Field u = eikonal_solve(grid, speed, grid.nearest(c.x, c.y), blocked);
    for (std::size_t k = 0; k < q.size(); ++k) q[k] += c.probability * u[k];
  }
  if (!blocked.empty()) {
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (blocked[k]) q[k] = kInf;
    }
  }
  return q;
}

}  // namespace uhp
