#include <cmath>
#include <sstream>

#include "doctest.h"
#include "gamedyn/catalog.h"
#include "gamedyn/equilibrium.h"
#include "gamedyn/game.h"
#include "gamedyn/random_game.h"
#include "gamedyn/replicator.h"
#include "gamedyn/rng.h"

using namespace gamedyn;

namespace {

State random_mixed(const Game& g, Rng& rng) {
  State x(g.dim());
  for (int p = 0; p < g.num_players(); ++p) {
    double sum = 0.0;
    for (int s = 0; s < g.strategy_counts()[p]; ++s) {
      double e = -std::log(1.0 - rng.next_double());
      x[g.offset(p) + s] = e;
      sum += e;
    }
    for (int s = 0; s < g.strategy_counts()[p]; ++s) x[g.offset(p) + s] /= sum;
  }
  return x;
}

// the defining formula, written with no shared machinery: growth equals
// share times (payoff of the strategy minus the holder's mean payoff)
State oracle_field(const Game& g, const State& x) {
  State out(g.dim(), 0.0);
  for (int p = 0; p < g.num_players(); ++p) {
    int n = g.strategy_counts()[p], off = g.offset(p);
    std::vector<double> u(n, 0.0);
    for (int z = 0; z < g.profile_count(); ++z) {
      double w = 1.0;
      for (int q = 0; q < g.num_players(); ++q)
        if (q != p) w *= x[g.offset(q) + g.strategy_of(z, q)];
      u[g.strategy_of(z, p)] += w * g.payoff(z, p);
    }
    double mean = 0.0;
    for (int s = 0; s < n; ++s) mean += x[off + s] * u[s];
    for (int s = 0; s < n; ++s) out[off + s] = x[off + s] * (u[s] - mean);
  }
  return out;
}

}  // namespace

TEST_CASE("both field forms match the defining formula") {
  Rng rng(31);
  for (auto shape : {std::vector<int>{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {3, 3, 3}})
    for (int trial = 0; trial < 20; ++trial) {
      Game g = random_game(shape, 500 + trial, GameClass::uniform);
      State x = random_mixed(g, rng);
      State want = oracle_field(g, x);
      State a = replicator_field(g, x);
      State b = replicator_field_alt(g, x);
      for (int k = 0; k < g.dim(); ++k) {
        CHECK(a[k] == doctest::Approx(want[k]).epsilon(1e-12));
        CHECK(b[k] == doctest::Approx(want[k]).epsilon(1e-12));
      }
    }
}

TEST_CASE("hand computed field on the coordination game") {
  Game co = catalog("co");
  State x = {0.75, 0.25, 0.75, 0.25};
  State f = replicator_field(co, x);
  CHECK(f[0] == doctest::Approx(0.09375).epsilon(1e-14));
  CHECK(f[1] == doctest::Approx(-0.09375).epsilon(1e-14));
  CHECK(f[2] == doctest::Approx(0.09375).epsilon(1e-14));
  CHECK(f[3] == doctest::Approx(-0.09375).epsilon(1e-14));
}

TEST_CASE("the field is tangent to the simplex and vanishes on vertices") {
  Rng rng(32);
  Game g = random_game({3, 3, 2}, 71, GameClass::uniform);
  for (int trial = 0; trial < 10; ++trial) {
    State f = replicator_field(g, random_mixed(g, rng));
    for (int p = 0; p < g.num_players(); ++p) {
      double sum = 0.0;
      for (int s = 0; s < g.strategy_counts()[p]; ++s) sum += f[g.offset(p) + s];
      CHECK(std::fabs(sum) <= 1e-14);
    }
  }
  for (int z = 0; z < g.profile_count(); ++z)
    for (double v : replicator_field(g, vertex_profile(g, z)))
      CHECK(v == 0.0);
}

TEST_CASE("zero coordinates stay exactly zero") {
  Game g = catalog("rps");
  State x0(g.dim(), 0.0);
  x0[0] = 0.3;
  x0[1] = 0.7;          // player 0 on a face
  x0[3] = x0[4] = 0.5;  // player 1 mixes two strategies
  auto tr = integrate(g, x0, 25.0);
  for (const auto& s : tr.states) {
    CHECK(s[2] == 0.0);
    CHECK(s[5] == 0.0);
  }
}

TEST_CASE("trajectories stay on the simplex with tiny drift") {
  Game g = catalog("mp");
  auto tr = integrate(g, State{0.9, 0.1, 0.2, 0.8}, 200.0);
  CHECK(tr.max_drift <= 1e-9);
  for (const auto& s : tr.states)
    for (int p = 0; p < 2; ++p)
      CHECK(std::fabs(s[2 * p] + s[2 * p + 1] - 1.0) <= 1e-12);
  CHECK(tr.times.front() == 0.0);
  CHECK(tr.times.back() == doctest::Approx(200.0));
  CHECK(tr.endpoint() == tr.states.back());
}

TEST_CASE("uniform is a rest point of matching pennies") {
  Game g = catalog("mp");
  State u = uniform_profile(g);
  for (double v : replicator_field(g, u)) CHECK(std::fabs(v) <= 1e-16);
  State end = flow_endpoint(g, u, 50.0);
  for (int k = 0; k < 4; ++k) CHECK(end[k] == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("zero sum interior equilibria conserve the kl sum") {
  for (const char* name : {"mp", "rps"}) {
    Game g = catalog(name);
    auto eq = zero_sum_interior_equilibrium(g);
    REQUIRE(eq.has_value());
    Rng rng(33);
    State x0 = random_mixed(g, rng);
    double k0 = kl_divergence_sum(g, *eq, x0);
    CHECK(kl_divergence_sum(g, *eq, *eq) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(k0 > 0.0);
    double worst = 0.0;
    integrate_observe(g, x0, 50.0, {}, [&](double, const State& x) {
      worst = std::max(worst, std::fabs(kl_divergence_sum(g, *eq, x) - k0));
    });
    CHECK(worst <= 1e-5);
  }
}

TEST_CASE("reverse integration runs the flow backwards") {
  Game g = catalog("rps");
  State x0 = {0.5, 0.3, 0.2, 0.25, 0.4, 0.35};
  State mid = flow_endpoint(g, x0, 5.0);
  IntegratorConfig back;
  back.reverse = true;
  State home = flow_endpoint(g, mid, 5.0, back);
  for (int k = 0; k < g.dim(); ++k)
    CHECK(home[k] == doctest::Approx(x0[k]).epsilon(1e-8));
}

TEST_CASE("dominance solvable games converge to the equilibrium vertex") {
  Game g = catalog("dd");
  State end = flow_endpoint(g, uniform_profile(g), 100.0);
  CHECK(end[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(end[2] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("observer sees the initial state and every step") {
  Game g = catalog("co");
  int calls = 0;
  double first_t = -1.0;
  State first;
  integrate_observe(g, uniform_profile(g), 1.0, {}, [&](double t, const State& x) {
    if (calls == 0) {
      first_t = t;
      first = x;
    }
    ++calls;
  });
  CHECK(first_t == 0.0);
  CHECK(first == uniform_profile(g));
  CHECK(calls == 101);
}

TEST_CASE("restricted and lifted trajectories coincide on a face") {
  Game g = random_strict_game({3, 3}, 123, GameClass::uniform);
  SubgameSpec spec{{{0, 2}, {1, 2}}};
  State x0(g.dim(), 0.0);
  x0[0] = 0.6;
  x0[2] = 0.4;
  x0[4] = 0.3;
  x0[5] = 0.7;
  CHECK(subgame_invariance_check(g, spec, x0, 50.0) <= 1e-9);
}

TEST_CASE("interior divergence vanishes for the replicator") {
  Game g = catalog("co");
  CHECK(std::fabs(interior_divergence(g, {0.6, 0.4, 0.3, 0.7})) <= 1e-8);
  Game r = catalog("rps");
  State x = {0.4, 0.35, 0.25, 0.3, 0.3, 0.4};
  CHECK(std::fabs(interior_divergence(r, x)) <= 1e-8);
}

TEST_CASE("csv export is rectangular and labeled") {
  Game g = catalog("mp");
  auto tr = integrate(g, uniform_profile(g), 0.05);
  auto csv = trajectory_csv(g, tr);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,0_H,0_T,1_H,1_T");
  int rows = 0;
  for (std::string line; std::getline(in, line);) {
    CHECK(std::count(line.begin(), line.end(), ',') == 4);
    ++rows;
  }
  CHECK(rows == int(tr.states.size()));
}
