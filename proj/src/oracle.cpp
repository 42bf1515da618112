#include "szilard/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <vector>

#include "szilard/error.hpp"
#include "szilard/rng.hpp"

namespace szilard::oracle {

namespace {

constexpr double kSlack = 1e-12;

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::TooLarge, what);
}

void require_epsilon(double eps) {
  if (!(eps >= 0.0 && eps < 1.0)) throw Error(ErrorCode::BadEpsilon, "epsilon outside [0, 1)");
}

std::vector<double> support_probs(const ExplicitDistribution& p) {
  std::vector<double> out;
  for (const Entry& e : p.support()) out.push_back(e.prob);
  return out;
}

// Value of bit `pos` counted from the left of an n-bit word.
bool bit_at(std::uint64_t word, std::size_t n, std::size_t pos) {
  return (word >> (n - 1 - pos)) % 2 == 1;
}

}  // namespace

double brute_hmax_smooth(const ExplicitDistribution& p, double eps) {
  require_epsilon(eps);
  const std::vector<double> probs = support_probs(p);
  const std::size_t k = probs.size();
  require(k <= 20, "brute_hmax_smooth: support larger than 20");

  // removed[mask] = mass of the entries in `mask`, built from the mask
  // without its lowest set bit.
  const std::size_t masks = std::size_t{1} << k;
  std::vector<double> removed(masks, 0.0);
  std::size_t best = k;
  for (std::size_t mask = 1; mask < masks; ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    removed[mask] = removed[mask & (mask - 1)] + probs[low];
    const std::size_t kept = k - static_cast<std::size_t>(std::popcount(mask));
    if (kept >= 1 && kept < best && removed[mask] <= eps * (1.0 + kSlack)) best = kept;
  }
  return std::log2(static_cast<double>(best));
}

double brute_hmin_smooth(const ExplicitDistribution& p, double eps, std::uint64_t seed,
                         std::size_t grid_points, std::size_t random_points) {
  require_epsilon(eps);
  const std::vector<double> probs = support_probs(p);
  require(probs.size() <= 20, "brute_hmin_smooth: support larger than 20");
  const double peak = *std::max_element(probs.begin(), probs.end());

  double best = -std::log2(peak);  // Q = P

  for (std::size_t g = 1; g <= grid_points; ++g) {
    const double level = peak * static_cast<double>(g) / static_cast<double>(grid_points);
    double cut = 0.0;
    for (double x : probs) cut += std::max(x - level, 0.0);
    if (cut <= eps) best = std::max(best, -std::log2(level));
  }

  Rng rng(seed);
  std::vector<double> take(probs.size());
  for (std::size_t r = 0; r < random_points; ++r) {
    // Random removal direction, scaled to a random fraction of the budget
    // and clipped so no entry goes negative.
    double total = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      const bool touch = rng.uniform() < 0.7;
      take[i] = touch ? probs[i] * rng.uniform() : 0.0;
      total += take[i];
    }
    if (total <= 0.0) continue;
    const double scale = rng.uniform() * eps / total;
    double top = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      const double q = probs[i] - std::min(probs[i], take[i] * scale);
      top = std::max(top, q);
    }
    if (top > 0.0) best = std::max(best, -std::log2(top));
  }
  return best;
}

ExactResult exhaustive_game_eval(const ExplicitDistribution& p, const Strategy& s,
                                 const WorkUnit& c) {
  const std::size_t n = p.bits();
  require(n <= 20, "exhaustive_game_eval: more than 20 boxes");
  if (s.plan.symbolic() || s.plan.n != n) {
    throw Error(ErrorCode::InvalidArgument, "exhaustive_game_eval needs a tabulated plan");
  }
  double success = 0.0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    const double px = p.prob(x);
    if (px == 0.0) continue;
    const std::uint64_t y = (*s.plan.permutation)(x);
    bool all = true;
    for (const Bet& b : s.bets) all = all && bit_at(y, n, b.position) == b.value;
    if (all) success += px;
  }
  const double committed = static_cast<double>(s.bets.size()) * c.joules;
  return {success, success * committed};
}

StrategySearchResult exhaustive_strategy_search(const ExplicitDistribution& p, double eps,
                                                const WorkUnit& c) {
  require_epsilon(eps);
  const std::size_t n = p.bits();
  require(n <= 3, "exhaustive_strategy_search: more than 3 boxes");
  const std::size_t size = std::size_t{1} << n;

  std::vector<double> prob(size);
  for (std::size_t x = 0; x < size; ++x) prob[x] = p.prob(x);

  // Each box is unused (0), bet L (1) or bet R (2).
  std::size_t assignments = 1;
  for (std::size_t i = 0; i < n; ++i) assignments *= 3;

  std::vector<std::uint64_t> images(size);
  std::iota(images.begin(), images.end(), std::uint64_t{0});

  StrategySearchResult best;
  bool found = false;
  do {
    for (std::size_t a = 0; a < assignments; ++a) {
      std::vector<Bet> bets;
      std::size_t code = a;
      for (std::size_t i = 0; i < n; ++i, code /= 3) {
        if (code % 3 != 0) bets.push_back({i, code % 3 == 2});
      }
      if (found && bets.size() <= best.boxes) continue;
      double failure = 0.0;
      double success = 0.0;
      for (std::size_t x = 0; x < size; ++x) {
        bool all = true;
        for (const Bet& b : bets) all = all && bit_at(images[x], n, b.position) == b.value;
        (all ? success : failure) += prob[x];
      }
      if (failure <= eps * (1.0 + kSlack)) {
        found = true;
        best.boxes = bets.size();
        best.success_prob = success;
        best.strategy.plan.n = n;
        best.strategy.plan.permutation = Permutation(n, images);
        best.strategy.plan.profile.clear();
        best.strategy.bets = bets;
      }
    }
  } while (std::next_permutation(images.begin(), images.end()));

  best.work_joules = static_cast<double>(best.boxes) * c.joules;
  return best;
}

}  // namespace szilard::oracle
