#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gamedyn {

// A mixed profile is one probability vector per player, stored flat:
// player p's distribution occupies [game.offset(p), game.offset(p) + |S_p|).
using State = std::vector<double>;

struct PureProfile {
  std::vector<int> strategies;  // one strategy index per player
};

// Per-player strategy subsets (sorted global indices). Doubles as the index
// map between a restricted game and the game it came from.
struct SubgameSpec {
  std::vector<std::vector<int>> sets;

  bool operator==(const SubgameSpec& o) const { return sets == o.sets; }
};

// Finite normal-form game with a dense payoff tensor. Profiles are linear
// indices in row-major order, player 0's strategy varying slowest; the
// payoff vector of profile z sits at payoffs[z * num_players()].
class Game {
 public:
  Game(std::vector<int> strategy_counts, std::vector<double> payoffs,
       std::vector<std::vector<std::string>> labels = {},
       std::string name = {});

  int num_players() const { return int(counts_.size()); }
  const std::vector<int>& strategy_counts() const { return counts_; }
  int profile_count() const { return profile_count_; }
  int dim() const { return dim_; }                 // sum of strategy counts
  int offset(int player) const { return offsets_[player]; }

  double payoff(int profile, int player) const {
    return payoffs_[std::size_t(profile) * counts_.size() + player];
  }
  const std::vector<double>& payoffs() const { return payoffs_; }

  int strategy_of(int profile, int player) const {
    return digits_[std::size_t(profile) * counts_.size() + player];
  }
  int profile_index(const PureProfile& p) const;
  PureProfile profile_at(int index) const;

  // profile with player's strategy replaced
  int deviate(int profile, int player, int strategy) const {
    return profile + (strategy - strategy_of(profile, player)) * strides_[player];
  }

  // opponent profiles of one player, enumerated as 0..antiprofile_count-1
  int antiprofile_count(int player) const {
    return int(anti_base_[player].size());
  }
  // full profile where `player` plays `strategy` against antiprofile `anti`
  int compose(int player, int anti, int strategy) const {
    return anti_base_[player][anti] + strategy * strides_[player];
  }

  const std::string& name() const { return name_; }
  const std::vector<std::vector<std::string>>& labels() const { return labels_; }
  const std::string& label(int player, int strategy) const {
    return labels_[player][strategy];
  }

 private:
  std::vector<int> counts_;
  std::vector<int> offsets_;
  std::vector<int> strides_;
  int profile_count_ = 0;
  int dim_ = 0;
  std::vector<double> payoffs_;
  std::vector<uint16_t> digits_;               // profile -> strategy per player
  std::vector<std::vector<int>> anti_base_;    // per player: profile with s_p=0
  std::vector<std::vector<std::string>> labels_;
  std::string name_;
};

// expected payoff of each player at mixed profile x
std::vector<double> expected_utility(const Game& g, const State& x);

// expected payoff of (player, strategy) against the others' mixtures in x
double pure_vs_mixed_utility(const Game& g, const State& x, int player,
                             int strategy);

// the single player two profiles differ in, if they differ in exactly one
std::optional<int> comparable(const Game& g, int profile_a, int profile_b);

// no ties in any single-player comparison
bool is_strict(const Game& g);

// subgame restricted to spec's strategy sets; payoff slices are copied
Game restrict_game(const Game& g, const SubgameSpec& spec);

// profile index translation between restricted and full game
int lift_profile(const Game& full, const SubgameSpec& spec,
                 int restricted_profile);

// zero-fill a restricted state back into the full coordinate layout
State lift_state(const Game& full, const SubgameSpec& spec,
                 const State& restricted);

// drop coordinates outside spec (state must be supported inside, tol-checked)
State project_state(const Game& full, const SubgameSpec& spec,
                    const State& x, double tol = 1e-12);

// smallest subgame whose faces carry x (strategies with mass > tol)
SubgameSpec support_subgame(const Game& g, const State& x, double tol = 0.0);

// survivors of iterated elimination of strictly dominated pure strategies
SubgameSpec iterated_strict_dominance(const Game& g);

SubgameSpec full_subgame(const Game& g);
bool spec_contains_profile(const SubgameSpec& spec, const PureProfile& p);
int subgame_profile_count(const SubgameSpec& spec);

// state helpers
State uniform_profile(const Game& g);
State vertex_profile(const Game& g, const PureProfile& p);
State vertex_profile(const Game& g, int profile);
// per-player simplex constraints within tol
bool valid_profile(const Game& g, const State& x, double tol = 1e-9);

}  // namespace gamedyn
