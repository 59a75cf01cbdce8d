#include "gamedyn/random_game.h"

#include <stdexcept>

#include "gamedyn/rng.h"

namespace gamedyn {

static Game draw(const std::vector<int>& shape, Rng& rng, GameClass cls) {
  int n = int(shape.size());
  long long profiles = 1;
  for (int c : shape) profiles *= c;
  std::vector<double> payoffs(std::size_t(profiles) * n);
  switch (cls) {
    case GameClass::uniform:
      for (auto& v : payoffs) v = rng.next_double();
      break;
    case GameClass::zero_sum:
      if (n != 2) throw std::invalid_argument("zero_sum class needs two players");
      for (long long z = 0; z < profiles; ++z) {
        double v = rng.next_double();
        payoffs[std::size_t(z) * 2] = v;
        payoffs[std::size_t(z) * 2 + 1] = -v;
      }
      break;
    case GameClass::identical_interest:
      for (long long z = 0; z < profiles; ++z) {
        double v = rng.next_double();
        for (int p = 0; p < n; ++p) payoffs[std::size_t(z) * n + p] = v;
      }
      break;
  }
  return Game(shape, std::move(payoffs));
}

Game random_game(const std::vector<int>& shape, uint64_t seed, GameClass cls) {
  Rng rng(seed);
  return draw(shape, rng, cls);
}

Game random_strict_game(const std::vector<int>& shape, uint64_t seed,
                        GameClass cls) {
  Rng rng(seed);
  for (int tries = 0; tries < 1000; ++tries) {
    Game g = draw(shape, rng, cls);
    if (is_strict(g)) return g;
  }
  throw std::runtime_error("could not draw a strict game");
}

}  // namespace gamedyn
