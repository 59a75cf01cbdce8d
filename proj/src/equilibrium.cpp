#include "gamedyn/equilibrium.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gamedyn {

std::optional<std::vector<double>> solve_linear(std::vector<double> a,
                                                std::vector<double> b, int n,
                                                double pivot_tol) {
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    if (std::abs(a[pivot * n + col]) < pivot_tol) return std::nullopt;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
      std::swap(b[pivot], b[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      double f = a[r * n + col] / a[col * n + col];
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double acc = b[r];
    for (int c = r + 1; c < n; ++c) acc -= a[r * n + c] * x[c];
    x[r] = acc / a[r * n + r];
  }
  return x;
}

std::optional<State> zero_sum_interior_equilibrium(const Game& g) {
  if (g.num_players() != 2)
    throw std::invalid_argument("interior equilibrium solver needs two players");
  int n = g.strategy_counts()[0];
  if (g.strategy_counts()[1] != n)
    throw std::invalid_argument("interior equilibrium solver needs a square game");
  if (n > 4)
    throw std::invalid_argument("interior equilibrium solver handles up to 4x4");
  for (int z = 0; z < g.profile_count(); ++z)
    if (g.payoff(z, 0) + g.payoff(z, 1) != 0.0)
      throw std::invalid_argument("game is not zero-sum");
  if (!is_strict(g))
    throw std::invalid_argument("interior equilibrium solver needs a strict game");

  auto u1 = [&](int s, int t) {
    PureProfile p;
    p.strategies = {s, t};
    return g.payoff(g.profile_index(p), 0);
  };

  int m = n + 1;  // mix plus game value
  // row mix making the column player indifferent
  std::vector<double> a(m * m, 0.0), b(m, 0.0);
  for (int t = 0; t < n; ++t) {
    for (int s = 0; s < n; ++s) a[t * m + s] = u1(s, t);
    a[t * m + n] = -1.0;
  }
  for (int s = 0; s < n; ++s) a[n * m + s] = 1.0;
  b[n] = 1.0;
  auto row = solve_linear(a, b, m);
  if (!row) return std::nullopt;

  // column mix making the row player indifferent
  std::fill(a.begin(), a.end(), 0.0);
  std::fill(b.begin(), b.end(), 0.0);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) a[s * m + t] = u1(s, t);
    a[s * m + n] = -1.0;
  }
  for (int t = 0; t < n; ++t) a[n * m + t] = 1.0;
  b[n] = 1.0;
  auto col = solve_linear(a, b, m);
  if (!col) return std::nullopt;

  for (int i = 0; i < n; ++i)
    if ((*row)[i] <= 0.0 || (*col)[i] <= 0.0) return std::nullopt;
  if (std::abs((*row)[n] - (*col)[n]) > 1e-9) return std::nullopt;

  // best-response check: both players indifferent across all pure strategies
  double v = (*col)[n];
  for (int s = 0; s < n; ++s) {
    double r = 0.0;
    for (int t = 0; t < n; ++t) r += u1(s, t) * (*col)[t];
    if (std::abs(r - v) > 1e-9) return std::nullopt;
  }
  double w = (*row)[n];
  for (int t = 0; t < n; ++t) {
    double c = 0.0;
    for (int s = 0; s < n; ++s) c += u1(s, t) * (*row)[s];
    if (std::abs(c - w) > 1e-9) return std::nullopt;
  }

  State x(g.dim());
  for (int s = 0; s < n; ++s) x[g.offset(0) + s] = (*row)[s];
  for (int t = 0; t < n; ++t) x[g.offset(1) + t] = (*col)[t];
  return x;
}

}  // namespace gamedyn
