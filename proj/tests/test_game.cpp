#include <cmath>

#include "doctest.h"
#include "gamedyn/game.h"
#include "gamedyn/random_game.h"
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

// expectation by full profile enumeration, no shortcuts shared with the library
double brute_expected(const Game& g, const State& x, int player) {
  double total = 0.0;
  for (int z = 0; z < g.profile_count(); ++z) {
    double w = 1.0;
    for (int p = 0; p < g.num_players(); ++p)
      w *= x[g.offset(p) + g.strategy_of(z, p)];
    total += w * g.payoff(z, player);
  }
  return total;
}

}  // namespace

TEST_CASE("profile indexing round trips") {
  Game g = random_game({2, 3, 4}, 5, GameClass::uniform);
  REQUIRE(g.profile_count() == 24);
  for (int z = 0; z < g.profile_count(); ++z) {
    PureProfile p = g.profile_at(z);
    CHECK(g.profile_index(p) == z);
    for (int q = 0; q < g.num_players(); ++q)
      CHECK(p.strategies[q] == g.strategy_of(z, q));
  }
  // player 0 varies slowest
  CHECK(g.strategy_of(0, 0) == 0);
  CHECK(g.strategy_of(12, 0) == 1);
  CHECK(g.strategy_of(1, 2) == 1);
}

TEST_CASE("deviate replaces exactly one strategy") {
  Game g = random_game({3, 3}, 9, GameClass::uniform);
  for (int z = 0; z < g.profile_count(); ++z)
    for (int p = 0; p < g.num_players(); ++p)
      for (int s = 0; s < 3; ++s) {
        int w = g.deviate(z, p, s);
        CHECK(g.strategy_of(w, p) == s);
        for (int q = 0; q < g.num_players(); ++q)
          if (q != p) CHECK(g.strategy_of(w, q) == g.strategy_of(z, q));
      }
}

TEST_CASE("compose enumerates every profile once per player") {
  Game g = random_game({2, 3, 2}, 3, GameClass::uniform);
  for (int p = 0; p < g.num_players(); ++p) {
    std::vector<int> hits(g.profile_count(), 0);
    for (int a = 0; a < g.antiprofile_count(p); ++a)
      for (int s = 0; s < g.strategy_counts()[p]; ++s)
        ++hits[g.compose(p, a, s)];
    for (int h : hits) CHECK(h == 1);
    // a's other players' strategies do not depend on s
    for (int a = 0; a < g.antiprofile_count(p); ++a)
      for (int q = 0; q < g.num_players(); ++q)
        if (q != p)
          CHECK(g.strategy_of(g.compose(p, a, 0), q) ==
                g.strategy_of(g.compose(p, a, 1), q));
  }
}

TEST_CASE("expected utility matches brute force enumeration") {
  Rng rng(77);
  for (auto shape : {std::vector<int>{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {3, 3, 3}})
    for (int trial = 0; trial < 20; ++trial) {
      Game g = random_game(shape, 100 + trial, GameClass::uniform);
      State x = random_mixed(g, rng);
      auto u = expected_utility(g, x);
      for (int p = 0; p < g.num_players(); ++p) {
        CHECK(u[p] == doctest::Approx(brute_expected(g, x, p)).epsilon(1e-12));
        // the expectation decomposes over own strategies
        double mix = 0.0;
        for (int s = 0; s < g.strategy_counts()[p]; ++s)
          mix += x[g.offset(p) + s] * pure_vs_mixed_utility(g, x, p, s);
        CHECK(mix == doctest::Approx(u[p]).epsilon(1e-12));
      }
    }
}

TEST_CASE("comparable detects single player deviations") {
  Game g = random_game({2, 2}, 1, GameClass::uniform);
  // profiles: 0=(0,0) 1=(0,1) 2=(1,0) 3=(1,1)
  CHECK(comparable(g, 0, 1) == 1);
  CHECK(comparable(g, 0, 2) == 0);
  CHECK_FALSE(comparable(g, 0, 3).has_value());
  CHECK_FALSE(comparable(g, 1, 2).has_value());
  CHECK_FALSE(comparable(g, 2, 2).has_value());
}

TEST_CASE("strictness detects ties") {
  CHECK(is_strict(random_game({3, 3}, 4, GameClass::uniform)));
  Game tied({2, 2}, {1, 0, 1, 0, 0, 1, 0, 1});  // player 1 indifferent everywhere
  CHECK_FALSE(is_strict(tied));
}

TEST_CASE("restriction slices payoffs and lifting inverts projection") {
  Game g = random_game({3, 3, 2}, 21, GameClass::uniform);
  SubgameSpec spec{{{0, 2}, {1}, {0, 1}}};
  Game r = restrict_game(g, spec);
  REQUIRE(r.strategy_counts() == std::vector<int>{2, 1, 2});
  for (int z = 0; z < r.profile_count(); ++z) {
    int full = lift_profile(g, spec, z);
    for (int p = 0; p < g.num_players(); ++p) {
      CHECK(g.strategy_of(full, p) == spec.sets[p][r.strategy_of(z, p)]);
      CHECK(r.payoff(z, p) == g.payoff(full, p));
    }
  }
  Rng rng(3);
  State xr = random_mixed(r, rng);
  State lifted = lift_state(g, spec, xr);
  CHECK(valid_profile(g, lifted));
  CHECK(project_state(g, spec, lifted) == xr);
}

TEST_CASE("iterated dominance peels strategies in rounds") {
  // column 1 dominates both others, after which row 0 dominates row 1
  Game g({2, 3}, {1, 0.5, 1, 0.9, 1, 0.1, 0, 0.2, 0, 0.3, 0, 0.05});
  auto spec = iterated_strict_dominance(g);
  CHECK(spec.sets == std::vector<std::vector<int>>{{0}, {1}});
  Game mp({2, 2}, {1, -1, -1, 1, -1, 1, 1, -1});
  CHECK(iterated_strict_dominance(mp).sets == full_subgame(mp).sets);
}

TEST_CASE("support subgame finds the carrying face") {
  Game g = random_game({3, 2}, 8, GameClass::uniform);
  State x(g.dim(), 0.0);
  x[0] = 0.3;
  x[2] = 0.7;  // player 0 on {0,2}
  x[3] = 1.0;  // player 1 on {0}
  auto spec = support_subgame(g, x);
  CHECK(spec.sets == std::vector<std::vector<int>>{{0, 2}, {0}});
  CHECK(subgame_profile_count(spec) == 2);
  CHECK(spec_contains_profile(spec, g.profile_at(g.profile_index({{2, 0}}))));
  CHECK_FALSE(spec_contains_profile(spec, {{1, 0}}));
}

TEST_CASE("vertex and uniform profiles are valid states") {
  Game g = random_game({2, 3, 4}, 2, GameClass::uniform);
  CHECK(valid_profile(g, uniform_profile(g)));
  for (int z = 0; z < g.profile_count(); ++z) {
    State v = vertex_profile(g, z);
    CHECK(valid_profile(g, v));
    for (int p = 0; p < g.num_players(); ++p)
      CHECK(v[g.offset(p) + g.strategy_of(z, p)] == 1.0);
  }
  State bad = uniform_profile(g);
  bad[0] += 0.5;
  CHECK_FALSE(valid_profile(g, bad));
}
