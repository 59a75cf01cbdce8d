#include <cmath>

#include "doctest.h"
#include "gamedyn/catalog.h"
#include "gamedyn/game.h"
#include "gamedyn/rng.h"
#include "gamedyn/trapping.h"
#include "json.hpp"

using namespace gamedyn;

TEST_CASE("escaping arcs exist exactly for non attracting boxes") {
  Game mp = catalog("mp");
  auto esc = find_escaping_arc(mp, {{{0}, {0}}});
  REQUIRE(esc.has_value());
  CHECK(esc->tail == 0);
  CHECK_FALSE(find_escaping_arc(catalog("co"), {{{0}, {0}}}).has_value());
  CHECK_FALSE(find_escaping_arc(mp, {{{0, 1}, {0, 1}}}).has_value());
}

TEST_CASE("certificate for the dominance solvable vertex") {
  Game g = catalog("dd");
  auto cert = trapping_certificate(g, {{{0}, {0}}});
  CHECK(cert.radius > 0.0);
  // both outside gaps stay strictly negative while outside masses are
  // below one half, so the bound reaches the cap
  CHECK(cert.radius == doctest::Approx(0.5));
  REQUIRE(cert.outside.size() == 2);
  for (const auto& rec : cert.outside) {
    CHECK(rec.worst_inside < 0.0);
    for (double a : rec.adv_inside) CHECK(a < 0.0);
    CHECK(rec.slack > 0.0);
    CHECK(cert.radius <= rec.radius_bound);
  }
  CHECK(cert.audit.samples == 1000);
  CHECK(cert.audit.all_negative);
  CHECK(cert.audit.max_velocity < 0.0);
}

TEST_CASE("certificate on the inner diamond sink") {
  Game g = catalog("inner_diamond");
  auto cert = trapping_certificate(g, {{{0}, {0}}});
  REQUIRE(cert.outside.size() == 4);
  CHECK(cert.radius == doctest::Approx(1.0 / 22).epsilon(1e-9));
  CHECK(cert.audit.all_negative);
}

TEST_CASE("non attracting subgames are refused") {
  CHECK_THROWS_AS(trapping_certificate(catalog("mp"), {{{0}, {0}}}), std::exception);
  try {
    trapping_certificate(catalog("mp"), {{{0}, {0}}});
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("attracting") != std::string::npos);
  }
}

TEST_CASE("non strict games are refused") {
  Game tied({2, 2}, {1, 0, 1, 0, 0, 1, 0, 1});
  CHECK_THROWS_AS(trapping_certificate(tied, {{{0}, {0}}}), std::exception);
}

TEST_CASE("the whole game traps vacuously") {
  Game g = catalog("co");
  auto cert = trapping_certificate(g, {{{0, 1}, {0, 1}}});
  CHECK(cert.radius == 0.5);
  CHECK(cert.outside.empty());
  CHECK(cert.audit.samples == 0);
  CHECK(cert.audit.all_negative);
}

TEST_CASE("neighborhood samples respect the radius and the simplex") {
  Game g = catalog("inner_diamond");
  SubgameSpec y{{{0}, {0}}};
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    State x = sample_neighborhood(g, y, 0.03, rng);
    for (int p = 0; p < g.num_players(); ++p) {
      double sum = 0.0;
      for (int s = 0; s < g.strategy_counts()[p]; ++s) {
        double v = x[g.offset(p) + s];
        CHECK(v > 0.0);
        if (s != 0) CHECK(v < 0.03);
        sum += v;
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("trajectories in the trapped neighborhood decay monotonically") {
  Game g = catalog("co");
  auto cert = trapping_certificate(g, {{{1}, {1}}});
  auto conv = converge_check(g, {{{1}, {1}}}, cert.radius, 25, 200.0);
  CHECK(conv.samples == 25);
  CHECK(conv.all_monotone);
  CHECK(conv.monotone_failures == 0);
  CHECK(conv.max_final_outside <= 1e-6);
}

TEST_CASE("certificate serialization carries the bound structure") {
  Game g = catalog("dd");
  auto cert = trapping_certificate(g, {{{0}, {0}}});
  auto j = nlohmann::json::parse(certificate_json(g, cert));
  CHECK(j["game"] == "dd");
  CHECK(j["radius"] == cert.radius);
  REQUIRE(j["outside_strategies"].size() == 2);
  CHECK(j["outside_strategies"][0].contains("adv_inside"));
  CHECK(j["audit"]["all_negative"] == true);
}
