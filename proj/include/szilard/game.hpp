#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "szilard/compress.hpp"
#include "szilard/entropy.hpp"
#include "szilard/probdist.hpp"

namespace szilard {

inline constexpr double kBoltzmann = 1.380649e-23;       // J/K
inline constexpr double kElectronVolt = 1.602176634e-19;  // J

/// Work value of one perfectly known box, c = kT ln 2.
struct WorkUnit {
  double kelvin = 0.0;
  double joules = 0.0;
  double electron_volts = 0.0;
};

WorkUnit work_unit(double kelvin);

/// An amount of work given in boxes (multiples of c) and physical units.
struct Energy {
  double bits = 0.0;
  double joules = 0.0;
  double electron_volts = 0.0;
};

Energy energy(double bits, const WorkUnit& c);

/// Box `position` (after the plan) is coupled to the weight, betting it
/// holds `value` (false = L).
struct Bet {
  std::size_t position;
  bool value;

  friend bool operator==(const Bet&, const Bet&) = default;
};

/// The agent's preset choices. Every bet box contributes c on success, so
/// the committed work is bets.size() * c.
struct Strategy {
  CompressionPlan plan;
  std::vector<Bet> bets;

  std::size_t committed_boxes() const { return bets.size(); }
  double committed_work(const WorkUnit& c) const {
    return static_cast<double>(bets.size()) * c.joules;
  }
};

/// Throws InvalidBets for out-of-range or repeated positions.
void validate_bets(std::size_t n, const std::vector<Bet>& bets);

struct GameConfig {
  double temperature_kelvin = 300.0;
  double epsilon = 1e-3;
  std::uint64_t seed = 0;
  std::uint64_t samples = 100000;
  unsigned workers = 1;
};

struct ExactResult {
  double success_prob = 0.0;
  double expected_work_joules = 0.0;
};

/// Risk-free value. `real` uses H_max^eps as a real number; `integral` rounds
/// it up to whole uncertain boxes, as an executable strategy must.
struct RiskFreeWork {
  Energy real;
  Energy integral;
};

RiskFreeWork thm1_work(const ExplicitDistribution& p, double eps, const WorkUnit& c);
RiskFreeWork thm1_work(const TypeClassView& view, double eps, const WorkUnit& c);

/// (n - H_min^eps + log2(1/eps)) c; requires 0 < eps < 1.
Energy thm2_bound(const ExplicitDistribution& p, double eps, const WorkUnit& c);
Energy thm2_bound(const TypeClassView& view, double eps, const WorkUnit& c);

struct WorkBounds {
  Energy min_work;
  Energy max_work;
  double epsilon = 0.0;
  std::size_t n = 0;
};

WorkBounds work_bounds(const ExplicitDistribution& p, double eps, const WorkUnit& c);
WorkBounds work_bounds(const TypeClassView& view, double eps, const WorkUnit& c);

/// n (1 - h(p)) c: the thermodynamic-limit value for Bernoulli(p)^n.
Energy shannon_limit_work(double p, std::size_t n, const WorkUnit& c);

ExactResult exact_evaluate(const ExplicitDistribution& p, const Strategy& s, const WorkUnit& c);

/// Canonical plan, betting L on the leading n - ceil(H_max^eps) boxes.
Strategy build_riskfree_strategy(const ExplicitDistribution& p, double eps);

/// Canonical plan with the m bets of highest joint success probability.
/// Exhaustive over position sets for n <= 16, greedy beyond.
Strategy build_gambler_strategy(const ExplicitDistribution& p, std::size_t m);

struct MonteCarloEstimate {
  double success_rate = 0.0;
  double mean_work_joules = 0.0;
  double standard_error = 0.0;
  std::uint64_t successes = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Independent plays in fixed-size chunks, chunk i drawing from stream i of
/// the seed, so results do not depend on the worker count.
MonteCarloEstimate monte_carlo(const ExplicitDistribution& p, const Strategy& s,
                               const GameConfig& config);

}  // namespace szilard
