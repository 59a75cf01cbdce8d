#include <cmath>
#include <string>

#include "doctest.h"
#include "gamedyn/catalog.h"
#include "gamedyn/game.h"
#include "gamedyn/replicator.h"
#include "gamedyn/witness.h"
#include "json.hpp"

using namespace gamedyn;

TEST_CASE("a chain crosses matching pennies within its epsilon") {
  Game g = catalog("mp");
  State from = {0.9, 0.1, 0.9, 0.1};
  State to = {0.1, 0.9, 0.1, 0.9};
  auto w = epsilon_chain_witness(g, from, to, 0.5);
  REQUIRE(w.has_value());
  CHECK(w->epsilon == 0.5);
  REQUIRE(w->points.size() >= 2);
  CHECK(w->points.front() == from);
  CHECK(w->points.back() == to);
  CHECK(w->times.size() == w->points.size() - 1);
  CHECK(w->jumps.size() == w->times.size());
  for (double t : w->times) CHECK(t >= 1.0 - 1e-12);
  for (double j : w->jumps) CHECK(j <= 0.5 + 1e-12);
  // re-verify each hop independently: flow, then measure the jump
  for (size_t i = 0; i + 1 < w->points.size(); ++i) {
    State reached = flow_endpoint(g, w->points[i], w->times[i]);
    double jump = 0.0;
    for (size_t k = 0; k < reached.size(); ++k)
      jump = std::max(jump, std::fabs(reached[k] - w->points[i + 1][k]));
    CHECK(jump == doctest::Approx(w->jumps[i]).epsilon(1e-12));
    CHECK(jump <= 0.5 + 1e-12);
  }
}

TEST_CASE("a rest point chains to itself trivially") {
  Game g = catalog("mp");
  State u = uniform_profile(g);
  auto w = epsilon_chain_witness(g, u, u, 0.05);
  REQUIRE(w.has_value());
  for (double j : w->jumps) CHECK(j <= 0.05);
}

TEST_CASE("an impossible chain returns nothing") {
  // dd flows into its vertex; no chain with a small epsilon leads back out
  Game g = catalog("dd");
  State at = vertex_profile(g, 0);
  State out = {0.1, 0.9, 0.1, 0.9};
  auto w = epsilon_chain_witness(g, at, out, 0.05);
  CHECK_FALSE(w.has_value());
}

TEST_CASE("too small an epsilon trips the box budget") {
  Game g = catalog("mp");
  State from = {0.9, 0.1, 0.9, 0.1};
  State to = {0.1, 0.9, 0.1, 0.9};
  try {
    epsilon_chain_witness(g, from, to, 0.001);
    FAIL("expected a budget error");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("epsilon") != std::string::npos);
  }
}

TEST_CASE("invalid endpoints are rejected") {
  Game g = catalog("mp");
  State bad = {0.9, 0.3, 0.5, 0.5};
  CHECK_THROWS(epsilon_chain_witness(g, bad, uniform_profile(g), 0.5));
}

TEST_CASE("witness serialization lists points and jumps") {
  Game g = catalog("mp");
  auto w = epsilon_chain_witness(g, State{0.9, 0.1, 0.9, 0.1},
                                 State{0.1, 0.9, 0.1, 0.9}, 0.5);
  REQUIRE(w.has_value());
  auto j = nlohmann::json::parse(witness_json(g, *w));
  CHECK(j["epsilon"] == 0.5);
  CHECK(j["points"].size() == w->points.size());
  CHECK(j["jumps"].size() == w->jumps.size());
}
