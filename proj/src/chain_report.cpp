#include "gamedyn/chain_report.h"

#include <algorithm>
#include <chrono>
#include <set>

#include "gamedyn/game_io.h"
#include "json.hpp"

namespace gamedyn {

ChainReport sink_chain_estimate(const Game& g, int denom,
                                const BoxMapConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  BoxCover cover(g.strategy_counts(), denom);
  BoxMapGraph graph = build_box_map(g, cover, cfg);

  ChainReport r;
  r.game_name = g.name();
  r.shape = g.strategy_counts();
  r.denom = denom;
  r.horizon = cfg.horizon;
  r.dt = cfg.dt;
  r.padding = graph.padding;
  r.delta = cover.delta();
  r.epsilon = graph.epsilon;
  r.boxes = cover.box_count();
  r.arcs = graph.arc_count;
  r.morse = morse_decomposition(graph);
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return r;
}

std::string chain_report_json(const ChainReport& r) {
  nlohmann::ordered_json j;
  j["game"] = r.game_name;
  j["shape"] = r.shape;
  j["denominator"] = r.denom;
  j["horizon"] = r.horizon;
  j["dt"] = r.dt;
  j["padding"] = r.padding;
  j["delta"] = r.delta;
  j["epsilon"] = r.epsilon;
  j["boxes"] = r.boxes;
  j["arcs"] = r.arcs;
  j["morse_sets"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < r.morse.sets.size(); ++k) {
    nlohmann::ordered_json m;
    m["id"] = k;
    m["sink"] = bool(r.morse.is_sink[k]);
    m["size"] = r.morse.sets[k].size();
    m["boxes"] = r.morse.sets[k];
    j["morse_sets"].push_back(std::move(m));
  }
  j["morse_arcs"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : r.morse.arcs)
    j["morse_arcs"].push_back(nlohmann::ordered_json::array({a, b}));
  return j.dump(2) + "\n";
}

std::string morse_graph_dot(const ChainReport& r) {
  std::string out = "digraph morse {\n  rankdir=TB;\n";
  for (std::size_t k = 0; k < r.morse.sets.size(); ++k) {
    out += "  M" + std::to_string(k) + " [label=\"M" + std::to_string(k) +
           "\\n" + std::to_string(r.morse.sets[k].size()) + " boxes\"";
    if (r.morse.is_sink[k]) out += " style=filled fillcolor=lightgrey";
    out += "];\n";
  }
  for (const auto& [a, b] : r.morse.arcs)
    out += "  M" + std::to_string(a) + " -> M" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

SinkCorrespondence match_sink_components(const Game& g,
                                         const SCCDecomposition& d,
                                         const BoxCover& cover,
                                         const MorseDecomposition& morse) {
  SinkCorrespondence out;
  out.sink_components = d.sink_ids();

  std::vector<bool> claimed(morse.sets.size(), false);
  std::vector<int> tentative;
  for (int comp : out.sink_components) {
    std::set<int> landed;  // morse set per vertex box, -1 transient
    for (int node : d.components[comp]) {
      int box = cover.locate(vertex_profile(g, node));
      int set = morse.set_of_box[box];
      landed.insert(set);
      if (set >= 0) claimed[set] = true;
    }
    bool bad = false;
    for (int set : landed)
      if (set < 0 || !morse.is_sink[set]) bad = true;
    if (bad) {
      out.match.push_back(SinkMatch::adrift);
      tentative.push_back(-1);
    } else if (landed.size() > 1) {
      out.match.push_back(SinkMatch::split);
      tentative.push_back(-1);
    } else {
      out.match.push_back(SinkMatch::matched);
      tentative.push_back(*landed.begin());
    }
  }

  // two components pointing at one sink Morse set are merged, not matched
  for (std::size_t i = 0; i < tentative.size(); ++i) {
    if (tentative[i] < 0) continue;
    for (std::size_t j = 0; j < tentative.size(); ++j)
      if (j != i && tentative[j] == tentative[i]) {
        out.match[i] = SinkMatch::merged;
        break;
      }
  }
  out.morse_of_component.assign(tentative.size(), -1);
  for (std::size_t i = 0; i < tentative.size(); ++i)
    if (out.match[i] == SinkMatch::matched)
      out.morse_of_component[i] = tentative[i];

  for (std::size_t k = 0; k < morse.sets.size(); ++k)
    if (morse.is_sink[k] && !claimed[k]) out.unmatched_morse.push_back(int(k));
  return out;
}

bool within_content_layer(const BoxCover& cover, const std::vector<int>& boxes,
                          const ComponentContent& content) {
  for (int box : boxes) {
    bool near = false;
    for (const SubgameSpec& y : content.maximal_boxes)
      if (cover.outside_layers(box, y) <= 1) {
        near = true;
        break;
      }
    if (!near) return false;
  }
  return true;
}

ConjectureScan conjecture_scan(const std::vector<int>& shape, int games,
                               int denom, uint64_t seed, GameClass cls,
                               const BoxMapConfig& cfg) {
  ConjectureScan scan;
  scan.shape = shape;
  scan.games = games;
  scan.denom = denom;

  BoxCover cover(shape, denom);
  for (int i = 0; i < games; ++i) {
    ConjectureCase c;
    c.seed = seed + uint64_t(i);
    Game g = random_strict_game(shape, c.seed, cls);
    ResponseGraph rg = build_response_graph(g);
    SCCDecomposition d = scc_decomposition(rg);
    BoxMapGraph graph = build_box_map(g, cover, cfg);
    MorseDecomposition morse = morse_decomposition(graph);
    SinkCorrespondence sc = match_sink_components(g, d, cover, morse);

    bool all_matched = sc.unmatched_morse.empty();
    for (SinkMatch m : sc.match)
      if (m != SinkMatch::matched) all_matched = false;

    if (!sc.unmatched_morse.empty()) {
      c.c1 = "violated";
      c.c2 = "unresolved";
      c.note = "sink Morse set " + std::to_string(sc.unmatched_morse[0]) +
               " holds no sink component vertex";
      c.game_json = save_game(g);
      ++scan.c1_violated;
      ++scan.c2_unresolved;
    } else if (!all_matched) {
      c.c1 = "unresolved";
      c.c2 = "unresolved";
      for (std::size_t k = 0; k < sc.match.size(); ++k)
        if (sc.match[k] != SinkMatch::matched) {
          const char* why = sc.match[k] == SinkMatch::merged  ? "merged"
                            : sc.match[k] == SinkMatch::split ? "split"
                                                              : "adrift";
          c.note = "sink component " +
                   std::to_string(sc.sink_components[k]) + " is " + why +
                   " at this resolution";
          break;
        }
      ++scan.c1_unresolved;
      ++scan.c2_unresolved;
    } else {
      c.c1 = "holds";
      ++scan.c1_holds;
      bool contained = true;
      for (std::size_t k = 0; k < sc.sink_components.size(); ++k) {
        ComponentContent cc =
            content(rg, d.components[sc.sink_components[k]]);
        if (!within_content_layer(
                cover, morse.sets[sc.morse_of_component[k]], cc)) {
          contained = false;
          c.note = "sink Morse set " +
                   std::to_string(sc.morse_of_component[k]) +
                   " leaves the content layer of component " +
                   std::to_string(sc.sink_components[k]);
          break;
        }
      }
      c.c2 = contained ? "holds" : "unresolved";
      if (contained)
        ++scan.c2_holds;
      else
        ++scan.c2_unresolved;
    }
    scan.cases.push_back(std::move(c));
  }
  return scan;
}

std::string scan_json(const ConjectureScan& s) {
  nlohmann::ordered_json j;
  j["shape"] = s.shape;
  j["games"] = s.games;
  j["denominator"] = s.denom;
  j["match_conjecture"]["holds"] = s.c1_holds;
  j["match_conjecture"]["unresolved"] = s.c1_unresolved;
  j["match_conjecture"]["violated"] = s.c1_violated;
  j["content_conjecture"]["holds"] = s.c2_holds;
  j["content_conjecture"]["unresolved"] = s.c2_unresolved;
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : s.cases) {
    nlohmann::ordered_json e;
    e["seed"] = c.seed;
    e["match"] = c.c1;
    e["content"] = c.c2;
    if (!c.note.empty()) e["note"] = c.note;
    if (!c.game_json.empty())
      e["game"] = nlohmann::ordered_json::parse(c.game_json);
    j["cases"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

}  // namespace gamedyn
