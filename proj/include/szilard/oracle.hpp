#pragma once

#include <cstdint>

#include "szilard/game.hpp"
#include "szilard/probdist.hpp"

// Brute-force references for small instances. Nothing here calls into the
// entropy, compress or game implementations they are used to check.
namespace szilard::oracle {

/// Minimum log2|S| over support subsets S whose complement has mass <= eps.
/// Support size at most 20.
double brute_hmax_smooth(const ExplicitDistribution& p, double eps);

/// Best -log2(max q) found over a grid of cut levels and random sub-P members
/// of the eps-ball. Support size at most 20.
double brute_hmin_smooth(const ExplicitDistribution& p, double eps, std::uint64_t seed = 1,
                         std::size_t grid_points = 10000, std::size_t random_points = 10000);

/// Success probability by enumerating all 2^n microstates; n <= 20.
ExactResult exhaustive_game_eval(const ExplicitDistribution& p, const Strategy& s,
                                 const WorkUnit& c);

struct StrategySearchResult {
  Strategy strategy;
  std::size_t boxes = 0;
  double work_joules = 0.0;
  double success_prob = 0.0;
};

/// Largest committed work over every relabeling, bet set and guess whose
/// failure mass is at most eps. n <= 3.
StrategySearchResult exhaustive_strategy_search(const ExplicitDistribution& p, double eps,
                                                const WorkUnit& c);

}  // namespace szilard::oracle
