#pragma once
#include <string>
#include <vector>

#include "gamedyn/game.h"

namespace gamedyn {

// Built-in games with fixed payoff tensors:
//   mp  - 2x2 matching pennies
//   co  - 2x2 pure coordination
//   sd  - 2x2 with one dominant strategy, unit payoff gaps
//   dd  - 2x2 with both strategies dominant, unit payoff gaps
//   rps - 3x3 rock-paper-scissors, win +1 / lose -1 / draw 0
//   inner_diamond, outer_diamond - the two strict 3x3 zero-sum games whose
//     response graphs are not strongly connected (frozen instances)
//   cmmp - 2x2x2 circular matching pennies: 1 chases 2, 2 chases 3,
//     3 flees 1
Game catalog(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace gamedyn
