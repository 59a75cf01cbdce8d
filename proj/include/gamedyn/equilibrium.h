#pragma once
#include <optional>

#include "gamedyn/game.h"

namespace gamedyn {

// Solves a dense linear system by Gaussian elimination with partial
// pivoting. Returns nothing if a pivot falls below the singularity
// threshold. `a` is row-major n x n, consumed along with `b`.
std::optional<std::vector<double>> solve_linear(std::vector<double> a,
                                                std::vector<double> b, int n,
                                                double pivot_tol = 1e-10);

// Fully mixed equilibrium of a square two-player zero-sum game (at most 4x4,
// strict). Solves both players' indifference systems and verifies the result
// is interior and a mutual best response. Empty when the system is singular
// or the solution leaves the open simplex.
std::optional<State> zero_sum_interior_equilibrium(const Game& g);

}  // namespace gamedyn
