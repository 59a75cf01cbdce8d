#include "gamedyn/catalog.h"

#include <stdexcept>

namespace gamedyn {

namespace {

Game two_player(std::vector<int> shape, std::vector<std::vector<double>> u,
                std::vector<std::vector<std::string>> labels, std::string name,
                bool zero_sum) {
  std::vector<double> payoffs;
  for (std::size_t z = 0; z < u.size(); ++z) {
    payoffs.push_back(u[z][0]);
    payoffs.push_back(zero_sum ? -u[z][0] : u[z][1]);
  }
  return Game(std::move(shape), std::move(payoffs), std::move(labels),
              std::move(name));
}

}  // namespace

Game catalog(const std::string& name) {
  if (name == "mp") {
    return two_player({2, 2},
                      {{1, -1}, {-1, 1}, {-1, 1}, {1, -1}},
                      {{"H", "T"}, {"H", "T"}}, "mp", false);
  }
  if (name == "co") {
    return two_player({2, 2},
                      {{1, 1}, {0, 0}, {0, 0}, {1, 1}},
                      {{"A", "B"}, {"A", "B"}}, "co", false);
  }
  if (name == "sd") {
    // player 0's first strategy dominates; player 1 wants to match
    return two_player({2, 2},
                      {{1, 1}, {1, 0}, {0, 0}, {0, 1}},
                      {{"A", "B"}, {"A", "B"}}, "sd", false);
  }
  if (name == "dd") {
    // both players' first strategies dominate
    return two_player({2, 2},
                      {{1, 1}, {1, 0}, {0, 1}, {0, 0}},
                      {{"A", "B"}, {"A", "B"}}, "dd", false);
  }
  if (name == "rps") {
    std::vector<double> u1 = {0, -1, 1, 1, 0, -1, -1, 1, 0};
    std::vector<std::vector<double>> u;
    for (double v : u1) u.push_back({v, -v});
    return two_player({3, 3}, u, {{"R", "P", "S"}, {"R", "P", "S"}}, "rps", true);
  }
  if (name == "inner_diamond") {
    // Frozen strict zero-sum tensor whose response graph has a single-node
    // sink component at (a,x) fed by an eight-node cycle component. Payoffs
    // are rank-quantized with step 0.15 so every comparable pair keeps a
    // healthy gap and the sink's basin contracts fast.
    std::vector<double> u1 = {
        0.60, 1.05, 0.75,
        0.30, 0.00, 0.90,
        0.45, 1.20, 0.15,
    };
    std::vector<std::vector<double>> u;
    for (double v : u1) u.push_back({v, -v});
    return two_player({3, 3}, u, {{"a", "b", "c"}, {"x", "y", "z"}},
                      "inner_diamond", true);
  }
  if (name == "outer_diamond") {
    // Frozen strict zero-sum tensor whose response graph has an eight-node
    // sink component around a single source at (b,y). Same 0.15 rank
    // quantization as inner_diamond.
    std::vector<double> u1 = {
        1.05, 0.75, 0.00,
        0.45, 0.60, 0.30,
        0.15, 0.90, 1.20,
    };
    std::vector<std::vector<double>> u;
    for (double v : u1) u.push_back({v, -v});
    return two_player({3, 3}, u, {{"a", "b", "c"}, {"x", "y", "z"}},
                      "outer_diamond", true);
  }
  if (name == "cmmp") {
    // players 0,1,2: 0 wants to match 1, 1 wants to match 2, 2 wants to
    // differ from 0
    std::vector<double> payoffs;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
          payoffs.push_back(a == b ? 1.0 : -1.0);
          payoffs.push_back(b == c ? 1.0 : -1.0);
          payoffs.push_back(c != a ? 1.0 : -1.0);
        }
    return Game({2, 2, 2}, std::move(payoffs),
                {{"H", "T"}, {"H", "T"}, {"H", "T"}}, "cmmp");
  }
  throw std::invalid_argument("unknown catalog game: " + name);
}

std::vector<std::string> catalog_names() {
  return {"mp", "co", "sd", "dd", "rps", "inner_diamond", "outer_diamond", "cmmp"};
}

}  // namespace gamedyn
