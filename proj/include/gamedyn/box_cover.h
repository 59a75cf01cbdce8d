#pragma once
#include <vector>

#include "gamedyn/game.h"
#include "gamedyn/rng.h"

namespace gamedyn {

// Barycentric subdivision of one player's strategy simplex with denominator
// `denom`. Supports up to three strategies (simplex dimension two): one cell
// for a single strategy, `denom` intervals for two, and denom^2 triangles for
// three (up triangles with corner sum denom-1 and down triangles with corner
// sum denom-2). Corners live on the lattice of multiples of 1/denom and are
// stored as integers, so face tests are exact.
class SimplexGrid {
 public:
  SimplexGrid(int strategies, int denom);

  int strategies() const { return strategies_; }
  int denom() const { return denom_; }
  int cell_count() const { return int(cells_.size()); }

  // cell containing x (length = strategies, sums to 1); lattice points go to
  // an adjacent up cell
  int locate(const double* x) const;

  // corner coordinates in units of 1/denom, each summing to denom
  std::vector<std::vector<int>> corner_ints(int cell) const;
  std::vector<std::vector<double>> corners(int cell) const;
  std::vector<double> center(int cell) const;
  std::vector<double> random_point(int cell, Rng& rng) const;

  // cells whose bounding box meets the infinity ball of radius rho around x;
  // an over-approximation of the cells meeting the ball
  std::vector<int> cells_near(const double* x, double rho) const;

  // largest corner coordinate (units of 1/denom) over strategies not in the
  // sorted set `inside`; 0 means the cell lies on the face spanned by inside
  int outside_max(int cell, const std::vector<int>& inside) const;

  // whether some corner of the cell lies on the face spanned by inside
  bool touches_face(int cell, const std::vector<int>& inside) const;

 private:
  struct Cell {
    std::vector<int> base;
    bool down = false;
  };
  int strategies_, denom_;
  std::vector<Cell> cells_;
  std::vector<int> up_index_, down_index_;  // base -> cell id lookup tables
  int base_key(const std::vector<int>& base) const;
};

// Product of per-player simplex grids over the full mixed-profile space.
// Boxes are numbered in mixed radix with player 0 slowest.
class BoxCover {
 public:
  BoxCover(const std::vector<int>& strategy_counts, int denom,
           long long budget = 5000000);

  int denom() const { return denom_; }
  double delta() const { return 1.0 / denom_; }  // cell diameter, inf norm
  int num_players() const { return int(grids_.size()); }
  const SimplexGrid& grid(int p) const { return grids_[p]; }
  int box_count() const { return box_count_; }

  std::vector<int> factor(int box) const;
  int combine(const std::vector<int>& cells) const;
  int locate(const State& x) const;

  std::vector<State> corner_points(int box) const;
  State center(int box) const;
  State random_point(int box, Rng& rng) const;

  // boxes whose bounding box meets the infinity ball around x
  std::vector<int> boxes_near(const State& x, double rho) const;

  // largest per-player outside corner coordinate in units of 1/denom; 0 when
  // the box touches the subgame's face, 1 when it is one layer away
  int outside_layers(int box, const SubgameSpec& y) const;
  bool touches_subgame(int box, const SubgameSpec& y) const;

 private:
  int denom_;
  std::vector<SimplexGrid> grids_;
  std::vector<int> strides_;
  int box_count_;
};

}  // namespace gamedyn
