#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "gamedyn/box_cover.h"
#include "gamedyn/box_map.h"
#include "gamedyn/catalog.h"
#include "gamedyn/game.h"
#include "gamedyn/rng.h"

using namespace gamedyn;

namespace {

// per coordinate distance from x to the box's bounding product, infinity norm
double box_distance(const BoxCover& cover, int box, const State& x) {
  auto corners = cover.corner_points(box);
  double worst = 0.0;
  for (size_t k = 0; k < x.size(); ++k) {
    double lo = 1e9, hi = -1e9;
    for (const auto& c : corners) {
      lo = std::min(lo, c[k]);
      hi = std::max(hi, c[k]);
    }
    worst = std::max(worst, std::max(lo - x[k], x[k] - hi));
  }
  return worst;
}

}  // namespace

TEST_CASE("box counts multiply the per player cell counts") {
  CHECK(BoxCover({2, 2}, 4).box_count() == 16);
  CHECK(BoxCover({2, 3}, 4).box_count() == 64);      // 4 segments x 16 triangles
  CHECK(BoxCover({3, 3}, 3).box_count() == 81);
  CHECK(BoxCover({2, 2, 2}, 5).box_count() == 125);
  CHECK_THROWS(BoxCover({4, 2}, 4));  // more than three strategies per player
}

TEST_CASE("locate returns the box that generated the point") {
  for (auto shape : {std::vector<int>{2, 2}, {2, 3}, {3, 3}}) {
    BoxCover cover(shape, 4);
    Rng rng(41);
    for (int b = 0; b < cover.box_count(); ++b) {
      CHECK(cover.locate(cover.center(b)) == b);
      for (int i = 0; i < 5; ++i)
        CHECK(cover.locate(cover.random_point(b, rng)) == b);
    }
  }
}

TEST_CASE("corners are exact grid points covering the box") {
  BoxCover cover({2, 3}, 4);
  for (int b = 0; b < cover.box_count(); ++b) {
    auto corners = cover.corner_points(b);
    CHECK(corners.size() == 2 * 3);  // segment ends times triangle corners
    for (const auto& c : corners) {
      for (double v : c) {
        CHECK(v >= 0.0);
        CHECK(v == doctest::Approx(std::round(v * 4) / 4).epsilon(1e-15));
      }
      CHECK(c[0] + c[1] == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(c[2] + c[3] + c[4] == doctest::Approx(1.0).epsilon(1e-15));
    }
    CHECK(box_distance(cover, b, cover.center(b)) <= 0.0);
  }
}

TEST_CASE("boxes_near matches the bounding box distance") {
  BoxCover cover({2, 3}, 4);
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    State x(5);
    double u = rng.next_double();
    x[0] = u;
    x[1] = 1 - u;
    double a = rng.next_double(), b = rng.next_double();
    if (a + b > 1) {
      a = 1 - a;
      b = 1 - b;
    }
    x[2] = a;
    x[3] = b;
    x[4] = 1 - a - b;
    for (double rho : {0.0, 0.1, 0.3}) {
      auto near = cover.boxes_near(x, rho);
      CHECK(std::is_sorted(near.begin(), near.end()));
      CHECK(std::binary_search(near.begin(), near.end(), cover.locate(x)));
      for (int box = 0; box < cover.box_count(); ++box) {
        bool member = std::binary_search(near.begin(), near.end(), box);
        double d = box_distance(cover, box, x);
        if (d <= rho - 1e-9) CHECK(member);
        if (member) CHECK(d <= rho + 1e-9);
      }
    }
  }
}

TEST_CASE("face touching boxes are those with a corner on the face") {
  for (auto shape : {std::vector<int>{2, 2}, {2, 3}}) {
    BoxCover cover(shape, 4);
    std::vector<SubgameSpec> specs;
    if (shape[1] == 2)
      specs = {{{{0}, {0}}}, {{{0, 1}, {0}}}, {{{0, 1}, {0, 1}}}};
    else
      specs = {{{{0}, {0}}}, {{{0}, {0, 2}}}, {{{0, 1}, {0, 1, 2}}}};
    for (const auto& y : specs)
      for (int b = 0; b < cover.box_count(); ++b) {
        bool corner_on_face = false;
        for (const auto& c : cover.corner_points(b)) {
          bool inside = true;
          for (size_t p = 0; p < shape.size(); ++p) {
            int off = p == 0 ? 0 : shape[0];
            for (int s = 0; s < shape[p]; ++s) {
              bool allowed = std::binary_search(y.sets[p].begin(),
                                                y.sets[p].end(), s);
              if (!allowed && c[off + s] != 0.0) inside = false;
            }
          }
          if (inside) corner_on_face = true;
        }
        CHECK(cover.touches_subgame(b, y) == corner_on_face);
      }
  }
}

TEST_CASE("outside layers count boxes away from the face") {
  BoxCover cover({2, 2}, 4);
  SubgameSpec y{{{0}, {0}}};
  Game g = catalog("co");
  for (int b = 0; b < cover.box_count(); ++b) {
    int layers = cover.outside_layers(b, y);
    // bounding interval of the outside coordinates, in grid units
    auto corners = cover.corner_points(b);
    double hi = 0.0;
    for (const auto& c : corners) hi = std::max({hi, c[1], c[3]});
    CHECK(layers == int(std::lround(hi * 4)));
  }
  CHECK(cover.outside_layers(cover.locate(vertex_profile(g, 0)), y) == 1);
  CHECK(cover.outside_layers(0, {{{0, 1}, {0, 1}}}) == 0);
}

TEST_CASE("box maps are deterministic and padding only adds arcs") {
  Game g = catalog("mp");
  BoxCover cover(g.strategy_counts(), 6);
  BoxMapConfig tight;
  tight.padding = 0.0;
  tight.seed = 3;
  auto a = build_box_map(g, cover, tight);
  auto b = build_box_map(g, cover, tight);
  CHECK(a.adjacency == b.adjacency);
  CHECK(a.arc_count == b.arc_count);
  CHECK(a.epsilon == doctest::Approx(1.0 / 6));

  BoxMapConfig padded = tight;
  padded.padding = -1.0;  // resolves to one box diameter
  auto c = build_box_map(g, cover, padded);
  CHECK(c.padding == doctest::Approx(1.0 / 6));
  CHECK(c.epsilon == doctest::Approx(2.0 / 6));
  long long total = 0;
  for (int v = 0; v < cover.box_count(); ++v) {
    CHECK(std::is_sorted(a.adjacency[v].begin(), a.adjacency[v].end()));
    CHECK(!a.adjacency[v].empty());
    CHECK(std::includes(c.adjacency[v].begin(), c.adjacency[v].end(),
                        a.adjacency[v].begin(), a.adjacency[v].end()));
    total += (long long)a.adjacency[v].size();
    CHECK(a.adjacency[v].back() < cover.box_count());
  }
  CHECK(total == a.arc_count);
}

TEST_CASE("box_image reproduces the map rows") {
  Game g = catalog("co");
  BoxCover cover(g.strategy_counts(), 5);
  BoxMapConfig cfg;
  cfg.padding = 0.0;
  auto m = build_box_map(g, cover, cfg);
  for (int b : {0, 7, 12, 24})
    CHECK(box_image(g, cover, b, cfg, 0.0) == m.adjacency[b]);
}

TEST_CASE("attracting vertices keep themselves in their image") {
  Game g = catalog("dd");
  BoxCover cover(g.strategy_counts(), 8);
  BoxMapConfig cfg;
  cfg.padding = 0.0;
  auto m = build_box_map(g, cover, cfg);
  int vbox = cover.locate(vertex_profile(g, 0));
  CHECK(std::binary_search(m.adjacency[vbox].begin(), m.adjacency[vbox].end(), vbox));
}
