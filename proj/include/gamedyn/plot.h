#pragma once
#include <string>

#include "gamedyn/box_map.h"
#include "gamedyn/game.h"

namespace gamedyn {

// Phase portrait of a two-player two-strategy game on the unit square
// (probability of each player's first strategy): a grid of velocity arrows
// with the sink Morse boxes of the box map shaded behind them. Returns a
// self-contained SVG document.
std::string phase_portrait_svg(const Game& g, int denom = 16,
                               const BoxMapConfig& cfg = {});

}  // namespace gamedyn
