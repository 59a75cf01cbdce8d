#pragma once
#include <cstdint>
#include <string>

#include "gamedyn/game.h"
#include "gamedyn/replicator.h"
#include "gamedyn/response_graph.h"
#include "gamedyn/rng.h"

namespace gamedyn {

// Certificate that the neighborhood of an attracting subgame traps the
// dynamic: whenever every outside strategy holds less than `radius`
// probability, every outside strategy's share is strictly shrinking.
struct TrappingCertificate {
  SubgameSpec subgame;
  double radius = 0.0;  // the M in the neighborhood bound

  struct OutsideStrategy {
    int player = 0;
    int strategy = 0;
    // payoff advantages of the outside strategy, maximized over opponent
    // profiles drawn from inside / outside the subgame
    std::vector<double> adv_inside;   // vs each inside strategy, inside others
    std::vector<double> adv_mixed;    // vs each inside strategy, outside others
    double adv_outside = 0.0;         // vs outside strategies, all others
    double worst_inside = 0.0;        // max of adv_inside, must be < 0
    double slack = 0.0;               // positive linear coefficient in the bound
    double radius_bound = 0.0;        // per-strategy cap on the radius
  };
  std::vector<OutsideStrategy> outside;

  struct Audit {
    int samples = 0;
    bool all_negative = false;
    double max_velocity = 0.0;  // largest outside velocity seen (want < 0)
  };
  Audit audit;
};

// Builds the certificate. Errors if the subgame's profile set is not
// attracting in the response graph, if the game is not strict, or if a
// computed inside advantage fails to be negative (which would contradict
// the attracting hypothesis). The returned radius is audited on `samples`
// random points of the neighborhood.
TrappingCertificate trapping_certificate(const Game& g, const SubgameSpec& y,
                                         int samples = 1000, uint64_t seed = 1);

// a profile set escapes: first arc leaving the subgame's profiles, if any
struct EscapingArc {
  int tail, head, player;
};
std::optional<EscapingArc> find_escaping_arc(const Game& g, const SubgameSpec& y);

struct ConvergenceReport {
  int samples = 0;
  bool all_monotone = false;        // every outside coordinate non-increasing
  double max_final_outside = 0.0;   // worst outside coordinate at t_max
  int monotone_failures = 0;
};

// Empirical check behind the certificate: trajectories started in the
// radius-neighborhood shed their outside mass monotonically.
ConvergenceReport converge_check(const Game& g, const SubgameSpec& y,
                                 double radius, int samples, double t_max,
                                 const IntegratorConfig& cfg = {},
                                 uint64_t seed = 2);

// random point with every outside coordinate strictly inside (0, radius)
State sample_neighborhood(const Game& g, const SubgameSpec& y, double radius,
                          Rng& rng);

std::string certificate_json(const Game& g, const TrappingCertificate& cert);

}  // namespace gamedyn
