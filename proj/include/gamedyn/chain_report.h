#pragma once
#include <string>
#include <vector>

#include "gamedyn/box_map.h"
#include "gamedyn/content.h"
#include "gamedyn/game.h"
#include "gamedyn/morse.h"
#include "gamedyn/random_game.h"
#include "gamedyn/response_graph.h"

namespace gamedyn {

// One full pass of the sink chain-component estimate: cover the mixed
// profile space with boxes, build the time-T box map, and keep its
// nontrivial strongly connected components.
struct ChainReport {
  std::string game_name;
  std::vector<int> shape;
  int denom = 0;
  double horizon = 0.0, dt = 0.0, padding = 0.0, delta = 0.0, epsilon = 0.0;
  int boxes = 0;
  long long arcs = 0;
  MorseDecomposition morse;
  double seconds = 0.0;  // wall clock, excluded from the serialized report
};

ChainReport sink_chain_estimate(const Game& g, int denom,
                                const BoxMapConfig& cfg = {});

// deterministic serialization (timing stripped)
std::string chain_report_json(const ChainReport& r);

// Morse sets and their reachability as a graph, sinks shaded
std::string morse_graph_dot(const ChainReport& r);

// How a sink component H of the response graph shows up in a box map:
// matched   - the vertex boxes of H land together in exactly one sink Morse
//             set that no other sink component claims
// merged    - several sink components share one sink Morse set
// split     - H's vertex boxes meet several Morse sets
// adrift    - some vertex box of H is transient or in a non-sink set
enum class SinkMatch { matched, merged, split, adrift };

struct SinkCorrespondence {
  std::vector<int> sink_components;     // response graph sink component ids
  std::vector<SinkMatch> match;         // per sink component
  std::vector<int> morse_of_component;  // matched sink Morse set id or -1
  std::vector<int> unmatched_morse;     // sink Morse sets no component claims
};

SinkCorrespondence match_sink_components(const Game& g,
                                         const SCCDecomposition& d,
                                         const BoxCover& cover,
                                         const MorseDecomposition& morse);

// Verdicts for the two structural conjectures on one game, at one
// resolution. "violated" is only reported for the first conjecture, when a
// sink Morse set exists that no response-graph sink component accounts for.
// The containment conjecture can only fail at a finer resolution than the
// boxes can see, so it reports holds or unresolved.
struct ConjectureCase {
  uint64_t seed = 0;
  std::string c1;  // sink chain components match sink connected components
  std::string c2;  // each sink chain component lies inside the content
  std::string note;
  std::string game_json;  // payoff dump, kept when c1 is violated
};

struct ConjectureScan {
  std::vector<int> shape;
  int games = 0;
  int denom = 0;
  int c1_holds = 0, c1_unresolved = 0, c1_violated = 0;
  int c2_holds = 0, c2_unresolved = 0;
  std::vector<ConjectureCase> cases;
};

ConjectureScan conjecture_scan(const std::vector<int>& shape, int games,
                               int denom, uint64_t seed, GameClass cls,
                               const BoxMapConfig& cfg = {});

std::string scan_json(const ConjectureScan& s);

// true when every box of the set is at most one box layer away from some
// maximal subgame box of the content
bool within_content_layer(const BoxCover& cover, const std::vector<int>& boxes,
                          const ComponentContent& content);

}  // namespace gamedyn
