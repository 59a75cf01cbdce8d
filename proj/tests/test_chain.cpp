#include <algorithm>

#include "doctest.h"
#include "gamedyn/box_cover.h"
#include "gamedyn/catalog.h"
#include "gamedyn/chain_report.h"
#include "gamedyn/content.h"
#include "gamedyn/morse.h"
#include "gamedyn/random_game.h"
#include "gamedyn/response_graph.h"
#include "json.hpp"

using namespace gamedyn;

namespace {

BoxMapGraph hand_graph(std::vector<std::vector<int>> adj) {
  BoxMapGraph g;
  for (auto& row : adj) std::sort(row.begin(), row.end());
  g.adjacency = std::move(adj);
  for (const auto& row : g.adjacency) g.arc_count += (long long)row.size();
  return g;
}

}  // namespace

TEST_CASE("morse sets are the nontrivial components") {
  // a two cycle fed by a transient node
  auto m = morse_decomposition(hand_graph({{1}, {0}, {0}}));
  REQUIRE(m.sets.size() == 1);
  CHECK(m.sets[0] == std::vector<int>{0, 1});
  CHECK(m.is_sink == std::vector<bool>{true});
  CHECK(m.set_of_box == std::vector<int>{0, 0, -1});
  CHECK(m.arcs.empty());

  // a self loop is nontrivial even as a singleton
  auto s = morse_decomposition(hand_graph({{0}, {0}}));
  REQUIRE(s.sets.size() == 1);
  CHECK(s.sets[0] == std::vector<int>{0});
  CHECK(s.set_of_box[1] == -1);
}

TEST_CASE("morse arcs pass through transient boxes") {
  // cycle {0,1} -> transient 2 -> cycle {3,4}, plus a stray transient 5
  auto m = morse_decomposition(
      hand_graph({{1}, {0, 2}, {3}, {4}, {3}, {0}}));
  REQUIRE(m.sets.size() == 2);
  int top = m.set_of_box[0], bot = m.set_of_box[3];
  REQUIRE(top >= 0);
  REQUIRE(bot >= 0);
  CHECK(m.arcs == std::vector<std::pair<int, int>>{{top, bot}});
  CHECK_FALSE(m.is_sink[top]);
  CHECK(m.is_sink[bot]);
  CHECK(m.set_of_box[2] == -1);
  CHECK(m.set_of_box[5] == -1);
}

TEST_CASE("sink chain estimate recovers the dominance solvable attractor") {
  Game g = catalog("dd");
  BoxMapConfig cfg;
  cfg.padding = 0.0;
  auto rep = sink_chain_estimate(g, 8, cfg);
  CHECK(rep.game_name == "dd");
  CHECK(rep.denom == 8);
  CHECK(rep.boxes == 64);
  CHECK(rep.delta == doctest::Approx(1.0 / 8));
  CHECK(rep.epsilon == doctest::Approx(1.0 / 8));
  CHECK(rep.seconds > 0.0);
  auto sinks = rep.morse.sink_ids();
  REQUIRE(sinks.size() == 1);
  BoxCover cover(g.strategy_counts(), 8);
  CHECK(rep.morse.sets[sinks[0]] ==
        std::vector<int>{cover.locate(vertex_profile(g, 0))});
}

TEST_CASE("chain reports serialize deterministically without timing") {
  Game g = catalog("co");
  BoxMapConfig cfg;
  cfg.padding = 0.0;
  auto a = chain_report_json(sink_chain_estimate(g, 6, cfg));
  auto b = chain_report_json(sink_chain_estimate(g, 6, cfg));
  CHECK(a == b);
  auto j = nlohmann::json::parse(a);
  CHECK(j["game"] == "co");
  CHECK(j["denominator"] == 6);
  CHECK(j["boxes"] == 36);
  CHECK_FALSE(j.contains("seconds"));
  int listed = 0;
  for (const auto& set : j["morse_sets"]) listed += int(set["boxes"].size());
  CHECK(listed <= 36);
  CHECK(j["morse_arcs"].is_array());
}

TEST_CASE("morse graph dot shades the sinks") {
  auto rep = sink_chain_estimate(catalog("co"), 6);
  auto dot = morse_graph_dot(rep);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("M0") != std::string::npos);
  CHECK(dot.find("lightgrey") != std::string::npos);
}

TEST_CASE("sink components match their Morse sets on the catalog") {
  for (const char* name : {"co", "mp", "dd"}) {
    Game g = catalog(name);
    auto d = scc_decomposition(build_response_graph(g));
    BoxCover cover(g.strategy_counts(), 8);
    BoxMapConfig cfg;
    cfg.padding = 0.0;
    auto rep = sink_chain_estimate(g, 8, cfg);
    auto corr = match_sink_components(g, d, cover, rep.morse);
    REQUIRE(corr.sink_components.size() == d.sink_ids().size());
    for (auto m : corr.match) CHECK(m == SinkMatch::matched);
    CHECK(corr.unmatched_morse.empty());
    for (int id : corr.morse_of_component) CHECK(id >= 0);
  }
}

TEST_CASE("content layer test tolerates exactly one box of slack") {
  Game g = catalog("co");
  BoxCover cover(g.strategy_counts(), 8);
  auto rg = build_response_graph(g);
  auto cc = content(rg, {0});
  int vbox = cover.locate(vertex_profile(g, 0));
  int far = cover.locate(vertex_profile(g, 3));
  CHECK(within_content_layer(cover, {vbox}, cc));
  CHECK_FALSE(within_content_layer(cover, {vbox, far}, cc));
}

TEST_CASE("small conjecture scans stay consistent and serialize") {
  BoxMapConfig cfg;
  cfg.padding = 0.0;
  auto s = conjecture_scan({2, 2}, 12, 8, 5, GameClass::uniform, cfg);
  CHECK(s.games == 12);
  CHECK(s.denom == 8);
  CHECK(s.c1_holds + s.c1_unresolved + s.c1_violated == 12);
  CHECK(s.c2_holds + s.c2_unresolved == 12);
  REQUIRE(s.cases.size() == 12);
  for (const auto& c : s.cases) {
    CHECK((c.c1 == "holds" || c.c1 == "unresolved" || c.c1 == "violated"));
    CHECK((c.c2 == "holds" || c.c2 == "unresolved"));
    if (c.c1 != "violated") CHECK(c.game_json.empty());
  }
  auto j = nlohmann::json::parse(scan_json(s));
  CHECK(j["games"] == 12);
  CHECK(j["cases"].size() == 12);
  CHECK(j["match_conjecture"]["holds"] == s.c1_holds);
  CHECK(j["content_conjecture"]["holds"] == s.c2_holds);
}
