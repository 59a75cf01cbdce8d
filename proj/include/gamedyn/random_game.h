#pragma once
#include <cstdint>
#include <vector>

#include "gamedyn/game.h"

namespace gamedyn {

enum class GameClass { uniform, zero_sum, identical_interest };

// Deterministic generator: same (shape, seed, class) gives the same tensor.
// uniform: all payoffs iid U(0,1). zero_sum: u2 = -u1 (two players).
// identical_interest: one common U(0,1) value per profile.
Game random_game(const std::vector<int>& shape, uint64_t seed, GameClass cls);

// redraws (advancing the same stream) until is_strict holds
Game random_strict_game(const std::vector<int>& shape, uint64_t seed,
                        GameClass cls);

}  // namespace gamedyn
