#include "gamedyn/box_cover.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gamedyn {

SimplexGrid::SimplexGrid(int strategies, int denom)
    : strategies_(strategies), denom_(denom) {
  if (strategies < 1 || strategies > 3)
    throw std::invalid_argument(
        "simplex grid supports between one and three strategies, got " +
        std::to_string(strategies));
  if (denom < 1) throw std::invalid_argument("grid denominator must be positive");

  int table = (denom + 1) * (denom + 1);
  up_index_.assign(table, -1);
  down_index_.assign(table, -1);
  if (strategies == 1) {
    cells_.push_back({{denom - 1}, false});
    up_index_[base_key(cells_[0].base)] = 0;
    return;
  }
  if (strategies == 2) {
    for (int f0 = 0; f0 < denom; ++f0) {
      up_index_[base_key({f0, denom - 1 - f0})] = int(cells_.size());
      cells_.push_back({{f0, denom - 1 - f0}, false});
    }
    return;
  }
  for (int f0 = 0; f0 <= denom - 1; ++f0)
    for (int f1 = 0; f1 <= denom - 1 - f0; ++f1) {
      std::vector<int> base{f0, f1, denom - 1 - f0 - f1};
      up_index_[base_key(base)] = int(cells_.size());
      cells_.push_back({base, false});
    }
  for (int f0 = 0; f0 <= denom - 2; ++f0)
    for (int f1 = 0; f1 <= denom - 2 - f0; ++f1) {
      std::vector<int> base{f0, f1, denom - 2 - f0 - f1};
      down_index_[base_key(base)] = int(cells_.size());
      cells_.push_back({base, true});
    }
}

int SimplexGrid::base_key(const std::vector<int>& base) const {
  return base[0] * (denom_ + 1) + (base.size() > 1 ? base[1] : 0);
}

int SimplexGrid::locate(const double* x) const {
  if (strategies_ == 1) return 0;
  if (strategies_ == 2) {
    int f0 = int(std::floor(denom_ * x[0]));
    return std::clamp(f0, 0, denom_ - 1);
  }
  int f[3];
  double frac[3];
  int sum = 0;
  for (int i = 0; i < 3; ++i) {
    double scaled = denom_ * std::clamp(x[i], 0.0, 1.0);
    f[i] = std::clamp(int(std::floor(scaled)), 0, denom_);
    frac[i] = scaled - f[i];
    sum += f[i];
  }
  int r = denom_ - sum;
  while (r > 2) {  // rounding left too little mass; bump the largest remainder
    int j = frac[0] >= frac[1] && frac[0] >= frac[2] ? 0 : (frac[1] >= frac[2] ? 1 : 2);
    ++f[j];
    frac[j] = 0.0;
    --r;
  }
  while (r < 1) {  // lattice point; assign to an adjacent up triangle
    for (int j = 0; j < 3; ++j)
      if (f[j] > 0) {
        --f[j];
        break;
      }
    ++r;
  }
  int id = r == 1 ? up_index_[base_key({f[0], f[1]})]
                  : down_index_[base_key({f[0], f[1]})];
  if (id < 0) throw std::logic_error("simplex grid failed to locate a point");
  return id;
}

std::vector<std::vector<int>> SimplexGrid::corner_ints(int cell) const {
  const Cell& c = cells_[cell];
  std::vector<std::vector<int>> out;
  if (!c.down) {
    for (int i = 0; i < strategies_; ++i) {
      std::vector<int> v = c.base;
      ++v[i];
      out.push_back(std::move(v));
    }
  } else {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        std::vector<int> v = c.base;
        ++v[i];
        ++v[j];
        out.push_back(std::move(v));
      }
  }
  return out;
}

std::vector<std::vector<double>> SimplexGrid::corners(int cell) const {
  std::vector<std::vector<double>> out;
  for (const auto& v : corner_ints(cell)) {
    std::vector<double> p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = double(v[i]) / denom_;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<double> SimplexGrid::center(int cell) const {
  auto cs = corners(cell);
  std::vector<double> m(strategies_, 0.0);
  for (const auto& p : cs)
    for (int i = 0; i < strategies_; ++i) m[i] += p[i] / double(cs.size());
  return m;
}

std::vector<double> SimplexGrid::random_point(int cell, Rng& rng) const {
  auto cs = corners(cell);
  std::vector<double> w(cs.size());
  double total = 0.0;
  for (auto& v : w) {
    v = -std::log(1.0 - rng.next_double());
    total += v;
  }
  std::vector<double> p(strategies_, 0.0);
  for (std::size_t k = 0; k < cs.size(); ++k)
    for (int i = 0; i < strategies_; ++i) p[i] += cs[k][i] * w[k] / total;
  return p;
}

std::vector<int> SimplexGrid::cells_near(const double* x, double rho) const {
  const double tol = 1e-12;
  std::vector<int> lo(strategies_), hi(strategies_);
  for (int i = 0; i < strategies_; ++i) {
    lo[i] = std::max(0, int(std::ceil(denom_ * (x[i] - rho - tol))) - 1);
    hi[i] = std::min(denom_, int(std::floor(denom_ * (x[i] + rho + tol))));
  }
  std::vector<int> out;
  if (strategies_ == 1) {
    if (lo[0] <= denom_ - 1 && hi[0] >= denom_ - 1) out.push_back(0);
    return out;
  }
  if (strategies_ == 2) {
    for (int f0 = lo[0]; f0 <= std::min(hi[0], denom_ - 1); ++f0) {
      int f1 = denom_ - 1 - f0;
      if (f1 >= lo[1] && f1 <= hi[1]) out.push_back(up_index_[base_key({f0, f1})]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  for (int f0 = lo[0]; f0 <= hi[0]; ++f0)
    for (int f1 = lo[1]; f1 <= hi[1]; ++f1) {
      int f2 = denom_ - 1 - f0 - f1;
      if (f2 >= lo[2] && f2 <= hi[2] && f2 >= 0)
        out.push_back(up_index_[base_key({f0, f1})]);
      f2 = denom_ - 2 - f0 - f1;
      if (f2 >= lo[2] && f2 <= hi[2] && f2 >= 0) {
        int id = down_index_[base_key({f0, f1})];
        if (id >= 0) out.push_back(id);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

int SimplexGrid::outside_max(int cell, const std::vector<int>& inside) const {
  int worst = 0;
  for (int s = 0; s < strategies_; ++s) {
    if (std::binary_search(inside.begin(), inside.end(), s)) continue;
    worst = std::max(worst, cells_[cell].base[s] + 1);
  }
  return worst;
}

bool SimplexGrid::touches_face(int cell, const std::vector<int>& inside) const {
  const Cell& c = cells_[cell];
  for (int s = 0; s < strategies_; ++s) {
    if (std::binary_search(inside.begin(), inside.end(), s)) continue;
    if (c.base[s] != 0) return false;
  }
  // a down triangle needs two inside corners to raise, an up triangle one
  return c.down ? inside.size() >= 2 : true;
}

BoxCover::BoxCover(const std::vector<int>& strategy_counts, int denom,
                   long long budget)
    : denom_(denom) {
  int dims = 0;
  for (int c : strategy_counts) {
    if (c > 3)
      throw std::invalid_argument(
          "box cover supports at most three strategies per player");
    dims += c - 1;
  }
  long long total = 1;
  for (int c : strategy_counts) {
    grids_.emplace_back(c, denom);
    total *= grids_.back().cell_count();
    if (total > budget) {
      int fit = denom;
      while (fit > 1) {
        long long t = 1;
        for (int cc : strategy_counts)
          for (int d = 0; d < cc - 1; ++d) t *= fit;
        if (t <= budget) break;
        --fit;
      }
      throw std::invalid_argument(
          "box cover with denominator " + std::to_string(denom) + " needs " +
          std::to_string(total) + "+ boxes, over the budget of " +
          std::to_string(budget) + "; denominator " + std::to_string(fit) +
          " fits");
    }
  }
  (void)dims;
  box_count_ = int(total);
  strides_.assign(grids_.size(), 1);
  for (int p = int(grids_.size()) - 2; p >= 0; --p)
    strides_[p] = strides_[p + 1] * grids_[p + 1].cell_count();
}

std::vector<int> BoxCover::factor(int box) const {
  std::vector<int> cells(grids_.size());
  for (std::size_t p = 0; p < grids_.size(); ++p) {
    cells[p] = box / strides_[p];
    box %= strides_[p];
  }
  return cells;
}

int BoxCover::combine(const std::vector<int>& cells) const {
  int box = 0;
  for (std::size_t p = 0; p < grids_.size(); ++p) box += cells[p] * strides_[p];
  return box;
}

int BoxCover::locate(const State& x) const {
  int box = 0, off = 0;
  for (std::size_t p = 0; p < grids_.size(); ++p) {
    box += grids_[p].locate(x.data() + off) * strides_[p];
    off += grids_[p].strategies();
  }
  return box;
}

std::vector<State> BoxCover::corner_points(int box) const {
  auto cells = factor(box);
  std::vector<std::vector<std::vector<double>>> per(grids_.size());
  int dim = 0;
  for (std::size_t p = 0; p < grids_.size(); ++p) {
    per[p] = grids_[p].corners(cells[p]);
    dim += grids_[p].strategies();
  }
  std::vector<State> out;
  std::vector<std::size_t> pick(grids_.size(), 0);
  while (true) {
    State x;
    x.reserve(dim);
    for (std::size_t p = 0; p < grids_.size(); ++p)
      x.insert(x.end(), per[p][pick[p]].begin(), per[p][pick[p]].end());
    out.push_back(std::move(x));
    std::size_t p = grids_.size();
    while (p > 0) {
      --p;
      if (++pick[p] < per[p].size()) break;
      pick[p] = 0;
      if (p == 0) return out;
    }
  }
}

State BoxCover::center(int box) const {
  auto cells = factor(box);
  State x;
  for (std::size_t p = 0; p < grids_.size(); ++p) {
    auto c = grids_[p].center(cells[p]);
    x.insert(x.end(), c.begin(), c.end());
  }
  return x;
}

State BoxCover::random_point(int box, Rng& rng) const {
  auto cells = factor(box);
  State x;
  for (std::size_t p = 0; p < grids_.size(); ++p) {
    auto c = grids_[p].random_point(cells[p], rng);
    x.insert(x.end(), c.begin(), c.end());
  }
  return x;
}

std::vector<int> BoxCover::boxes_near(const State& x, double rho) const {
  std::vector<std::vector<int>> per(grids_.size());
  int off = 0;
  for (std::size_t p = 0; p < grids_.size(); ++p) {
    per[p] = grids_[p].cells_near(x.data() + off, rho);
    if (per[p].empty()) return {};
    off += grids_[p].strategies();
  }
  std::vector<int> out;
  std::vector<std::size_t> pick(grids_.size(), 0);
  while (true) {
    int box = 0;
    for (std::size_t p = 0; p < grids_.size(); ++p)
      box += per[p][pick[p]] * strides_[p];
    out.push_back(box);
    std::size_t p = grids_.size();
    bool done = true;
    while (p > 0) {
      --p;
      if (++pick[p] < per[p].size()) {
        done = false;
        break;
      }
      pick[p] = 0;
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

int BoxCover::outside_layers(int box, const SubgameSpec& y) const {
  auto cells = factor(box);
  int worst = 0;
  for (std::size_t p = 0; p < grids_.size(); ++p)
    worst = std::max(worst, grids_[p].outside_max(cells[p], y.sets[p]));
  return worst;
}

bool BoxCover::touches_subgame(int box, const SubgameSpec& y) const {
  auto cells = factor(box);
  for (std::size_t p = 0; p < grids_.size(); ++p)
    if (!grids_[p].touches_face(cells[p], y.sets[p])) return false;
  return true;
}

}  // namespace gamedyn
