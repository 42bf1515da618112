#include "szilard/game.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <thread>

#include "szilard/error.hpp"

namespace szilard {

namespace {

constexpr std::uint64_t kChunk = 4096;

// Number of boxes needed to index k outcomes: ceil(log2 k).
std::size_t index_width(std::uint64_t k) {
  return k <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(k - 1));
}

void check_positive_epsilon(double eps) {
  check_epsilon(eps);
  if (eps == 0.0) throw Error(ErrorCode::BadEpsilon, "the risk-tolerant bound needs eps > 0");
}

bool bets_hold(std::uint64_t index, std::size_t n, const std::vector<Bet>& bets) {
  for (const Bet& b : bets) {
    if (index_bit(index, n, b.position) != b.value) return false;
  }
  return true;
}

const Permutation& table_of(const Strategy& s, std::size_t n) {
  if (s.plan.n != n) throw Error(ErrorCode::ArityMismatch, "plan width differs from distribution");
  if (s.plan.symbolic()) throw Error(ErrorCode::SymbolicPlan, "plan has no permutation table");
  return *s.plan.permutation;
}

}  // namespace

WorkUnit work_unit(double kelvin) {
  if (!(kelvin > 0.0) || std::isinf(kelvin)) {
    throw Error(ErrorCode::NonpositiveTemperature, "temperature must be positive");
  }
  WorkUnit c;
  c.kelvin = kelvin;
  c.joules = kBoltzmann * kelvin * std::numbers::ln2;
  c.electron_volts = c.joules / kElectronVolt;
  return c;
}

Energy energy(double bits, const WorkUnit& c) {
  return {bits, bits * c.joules, bits * c.electron_volts};
}

void validate_bets(std::size_t n, const std::vector<Bet>& bets) {
  std::vector<bool> used(n, false);
  for (const Bet& b : bets) {
    if (b.position >= n) {
      throw Error(ErrorCode::InvalidBets, "bet on box " + std::to_string(b.position) +
                                              " of " + std::to_string(n));
    }
    if (used[b.position]) {
      throw Error(ErrorCode::InvalidBets, "box " + std::to_string(b.position) + " bet twice");
    }
    used[b.position] = true;
  }
}

// ---------------------------------------------------------------------------

RiskFreeWork thm1_work(const ExplicitDistribution& p, double eps, const WorkUnit& c) {
  const MaxSmoothing s = max_smoothing(p, eps);
  const auto n = static_cast<double>(p.bits());
  return {energy(n - s.bits, c),
          energy(n - static_cast<double>(index_width(s.retained)), c)};
}

RiskFreeWork thm1_work(const TypeClassView& view, double eps, const WorkUnit& c) {
  const double h = h_max_smooth(view, eps);
  const auto n = static_cast<double>(view.bits());
  // Class counts come from log-gamma; forgive their rounding before ceil.
  const double uncertain = std::max(0.0, std::ceil(h - 1e-9));
  return {energy(n - h, c), energy(n - uncertain, c)};
}

Energy thm2_bound(const ExplicitDistribution& p, double eps, const WorkUnit& c) {
  check_positive_epsilon(eps);
  const auto n = static_cast<double>(p.bits());
  return energy(n - h_min_smooth(p, eps) + std::log2(1.0 / eps), c);
}

Energy thm2_bound(const TypeClassView& view, double eps, const WorkUnit& c) {
  check_positive_epsilon(eps);
  const auto n = static_cast<double>(view.bits());
  return energy(n - h_min_smooth(view, eps) + std::log2(1.0 / eps), c);
}

WorkBounds work_bounds(const ExplicitDistribution& p, double eps, const WorkUnit& c) {
  return {thm1_work(p, eps, c).real, thm2_bound(p, eps, c), eps, p.bits()};
}

WorkBounds work_bounds(const TypeClassView& view, double eps, const WorkUnit& c) {
  return {thm1_work(view, eps, c).real, thm2_bound(view, eps, c), eps, view.bits()};
}

Energy shannon_limit_work(double p, std::size_t n, const WorkUnit& c) {
  return energy(static_cast<double>(n) * (1.0 - binary_entropy(p)), c);
}

// ---------------------------------------------------------------------------

ExactResult exact_evaluate(const ExplicitDistribution& p, const Strategy& s, const WorkUnit& c) {
  const std::size_t n = p.bits();
  const Permutation& pi = table_of(s, n);
  validate_bets(n, s.bets);
  double success = 0.0;
  for (const Entry& e : p.support()) {
    if (bets_hold(pi(e.index), n, s.bets)) success += e.prob;
  }
  return {success, success * s.committed_work(c)};
}

Strategy build_riskfree_strategy(const ExplicitDistribution& p, double eps) {
  const MaxSmoothing smooth = max_smoothing(p, eps);
  Strategy s;
  s.plan = canonical_permutation(p);
  const std::size_t known = p.bits() - index_width(smooth.retained);
  for (std::size_t i = 0; i < known; ++i) s.bets.push_back({i, false});
  return s;
}

namespace {

struct Guess {
  double prob = -1.0;
  std::vector<Bet> bets;
};

// Best assignment on a fixed position set: the marginal's peak. Ties go to
// the smaller key, i.e. L before R.
Guess best_guess(const ExplicitDistribution& q, const std::vector<std::size_t>& positions) {
  const std::size_t n = q.bits();
  const std::size_t m = positions.size();
  std::vector<double> marginal(std::size_t{1} << m, 0.0);
  for (const Entry& e : q.support()) {
    std::size_t key = 0;
    for (std::size_t pos : positions) key = (key << 1) | (index_bit(e.index, n, pos) ? 1U : 0U);
    marginal[key] += e.prob;
  }
  const auto top = std::max_element(marginal.begin(), marginal.end());
  const auto key = static_cast<std::uint64_t>(top - marginal.begin());
  Guess g;
  g.prob = *top;
  for (std::size_t i = 0; i < m; ++i) g.bets.push_back({positions[i], index_bit(key, m, i)});
  return g;
}

Guess exhaustive_bets(const ExplicitDistribution& q, std::size_t m) {
  const std::size_t n = q.bits();
  std::vector<std::size_t> positions(m);
  for (std::size_t i = 0; i < m; ++i) positions[i] = i;
  Guess best;
  while (true) {
    Guess g = best_guess(q, positions);
    if (g.prob > best.prob) best = std::move(g);
    // Next m-combination of {0..n-1} in lexicographic order.
    std::size_t i = m;
    while (i > 0 && positions[i - 1] == n - m + i - 1) --i;
    if (i == 0) break;
    ++positions[i - 1];
    for (std::size_t j = i; j < m; ++j) positions[j] = positions[j - 1] + 1;
  }
  return best;
}

Guess greedy_bets(const ExplicitDistribution& q, std::size_t m) {
  const std::size_t n = q.bits();
  std::vector<Bet> chosen;
  std::vector<bool> used(n, false);
  double joint = 1.0;
  for (std::size_t round = 0; round < m; ++round) {
    double best = -1.0;
    Bet pick{0, false};
    for (std::size_t pos = 0; pos < n; ++pos) {
      if (used[pos]) continue;
      double mass[2] = {0.0, 0.0};
      for (const Entry& e : q.support()) {
        if (bets_hold(e.index, n, chosen)) mass[index_bit(e.index, n, pos) ? 1 : 0] += e.prob;
      }
      for (int v = 0; v < 2; ++v) {
        if (mass[v] > best) {
          best = mass[v];
          pick = {pos, v == 1};
        }
      }
    }
    used[pick.position] = true;
    chosen.push_back(pick);
    joint = best;
  }
  std::sort(chosen.begin(), chosen.end(),
            [](const Bet& a, const Bet& b) { return a.position < b.position; });
  return {joint, std::move(chosen)};
}

}  // namespace

Strategy build_gambler_strategy(const ExplicitDistribution& p, std::size_t m) {
  if (m < 1 || m > p.bits()) {
    throw Error(ErrorCode::BadBetSize, "bet size must lie in 1.." + std::to_string(p.bits()));
  }
  Strategy s;
  s.plan = canonical_permutation(p);
  const ExplicitDistribution q = compress(p, s.plan);
  s.bets = (p.bits() <= 16 ? exhaustive_bets(q, m) : greedy_bets(q, m)).bets;
  return s;
}

// ---------------------------------------------------------------------------

MonteCarloEstimate monte_carlo(const ExplicitDistribution& p, const Strategy& s,
                               const GameConfig& config) {
  const std::size_t n = p.bits();
  const Permutation& pi = table_of(s, n);
  validate_bets(n, s.bets);
  if (config.samples == 0) throw Error(ErrorCode::InvalidArgument, "need at least one sample");
  const WorkUnit c = work_unit(config.temperature_kelvin);

  const OutcomeSampler sampler(p);
  const Rng root(config.seed);
  const std::uint64_t chunks = (config.samples + kChunk - 1) / kChunk;
  std::vector<std::uint64_t> wins(chunks, 0);

  auto run_chunk = [&](std::uint64_t chunk) {
    Rng rng = root.split(chunk);
    const std::uint64_t begin = chunk * kChunk;
    const std::uint64_t end = std::min(config.samples, begin + kChunk);
    std::uint64_t hits = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      if (bets_hold(pi(sampler(rng)), n, s.bets)) ++hits;
    }
    wins[chunk] = hits;
  };

  const unsigned workers = std::max(1U, config.workers);
  if (workers == 1 || chunks == 1) {
    for (std::uint64_t chunk = 0; chunk < chunks; ++chunk) run_chunk(chunk);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t chunk = w; chunk < chunks; chunk += workers) run_chunk(chunk);
      });
    }
  }

  MonteCarloEstimate est;
  est.samples = config.samples;
  est.seed = config.seed;
  for (std::uint64_t w : wins) est.successes += w;
  const auto total = static_cast<double>(est.samples);
  est.success_rate = static_cast<double>(est.successes) / total;
  est.mean_work_joules = est.success_rate * s.committed_work(c);
  const double adjusted = (static_cast<double>(est.successes) + 0.5) / (total + 1.0);
  est.standard_error = std::sqrt(adjusted * (1.0 - adjusted) / total);
  return est;
}

}  // namespace szilard
