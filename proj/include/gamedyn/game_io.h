#pragma once
#include <string>

#include "gamedyn/game.h"

namespace gamedyn {

// Game files are JSON:
//   {"players": N, "strategies": [[names...] per player],
//    "payoffs": [[u_1..u_N] per profile, row-major, player 1 slowest],
//    "name": optional}
// Payoffs round-trip exactly (17 significant digits on write).
Game load_game(const std::string& text);
Game load_game_file(const std::string& path);
std::string save_game(const Game& g);
void save_game_file(const Game& g, const std::string& path);

// "0.9,0.1;0.5,0.5" (players split by ';') or "uniform"
State parse_mixed_profile(const Game& g, const std::string& text);
std::string format_mixed_profile(const Game& g, const State& x);

// "0;0,1" per-player strategy index lists
SubgameSpec parse_subgame(const Game& g, const std::string& text);
std::string format_subgame(const Game& g, const SubgameSpec& spec);

// full double precision, shortest form that round-trips
std::string format_double(double v);

}  // namespace gamedyn
