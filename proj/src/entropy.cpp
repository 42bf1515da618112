#include "szilard/entropy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <vector>

#include "szilard/error.hpp"

namespace szilard {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double budget(double eps) { return eps * (1.0 + kBudgetSlack); }

// log2(2^a - m) for 0 <= m < 2^a, with m given as log2 m.
double log2_minus(double log2_a, double log2_m) {
  if (std::isinf(log2_m)) return log2_a;
  return log2_a + std::log1p(-std::exp2(log2_m - log2_a)) / std::numbers::ln2;
}

}  // namespace

void check_epsilon(double eps) {
  if (!(eps >= 0.0 && eps < 1.0)) {
    throw Error(ErrorCode::BadEpsilon, "epsilon must lie in [0, 1), got " + std::to_string(eps));
  }
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::ProbabilityOutOfRange, "p outside [0, 1]");
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double shannon(const ExplicitDistribution& p) {
  double h = 0.0;
  for (const Entry& e : p.support()) h -= e.prob * std::log2(e.prob);
  return h;
}

double shannon(const TypeClassView& view) {
  double h = 0.0;
  for (std::size_t k = 0; k < view.classes(); ++k) {
    if (!view.class_in_support(k)) continue;
    h -= std::exp2(view.class_log_mass(k)) * view.class_log_prob(k);
  }
  return h;
}

double h_min(const ExplicitDistribution& p) { return -std::log2(p.peak()); }

double h_min(const TypeClassView& view) {
  double top = -kInf;
  for (double lp : view.log_probs()) top = std::max(top, lp);
  return -top;
}

double h_max(const ExplicitDistribution& p) {
  return std::log2(static_cast<double>(p.support_size()));
}

double h_max(const TypeClassView& view) {
  std::vector<double> counts;
  for (std::size_t k = 0; k < view.classes(); ++k) {
    if (view.class_in_support(k)) counts.push_back(view.class_log_count(k));
  }
  return log2_sum_exp2(counts);
}

// ---------------------------------------------------------------------------

MaxSmoothing max_smoothing(const ExplicitDistribution& p, double eps) {
  check_epsilon(eps);
  std::vector<Entry> order(p.support().begin(), p.support().end());
  std::sort(order.begin(), order.end(), [](const Entry& a, const Entry& b) {
    return a.prob != b.prob ? a.prob < b.prob : a.index > b.index;
  });
  const double allowed = budget(eps);
  double removed = 0.0;
  std::size_t deleted = 0;
  // At least one outcome survives.
  while (deleted + 1 < order.size() && removed + order[deleted].prob <= allowed) {
    removed += order[deleted].prob;
    ++deleted;
  }
  std::vector<Entry> kept(order.begin() + static_cast<std::ptrdiff_t>(deleted), order.end());
  MaxSmoothing out;
  out.retained = kept.size();
  out.bits = std::log2(static_cast<double>(out.retained));
  out.witness = ExplicitDistribution::subnormalized(p.bits(), std::move(kept));
  return out;
}

MaxSmoothing max_smoothing(const TypeClassView& view, double eps) {
  check_epsilon(eps);
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < view.classes(); ++k) {
    if (view.class_in_support(k)) order.push_back(k);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return view.class_log_prob(a) < view.class_log_prob(b);
  });

  const double allowed = budget(eps);
  double removed = 0.0;
  std::size_t whole = 0;
  double log2_partial = -kInf;  // strings deleted from the first surviving class
  for (; whole + 1 < order.size(); ++whole) {
    const std::size_t k = order[whole];
    const double mass = std::exp2(view.class_log_mass(k));
    if (removed + mass <= allowed) {
      removed += mass;
      continue;
    }
    break;
  }
  {
    // Part of the first surviving class can still go, but never all of it.
    const std::size_t k = order[whole];
    const double left = allowed - removed;
    if (left > 0.0) {
      const double log2_m = std::log2(left) - view.class_log_prob(k);
      const double log2_most = log2_minus(view.class_log_count(k), 0.0);
      if (log2_m < 53.0) {
        const double m = std::floor(std::exp2(log2_m));
        if (m > 0.0) log2_partial = std::min(std::log2(m), log2_most);
      } else {
        log2_partial = std::min(log2_m, log2_most);
      }
    }
  }

  std::vector<double> kept;
  for (std::size_t i = whole; i < order.size(); ++i) kept.push_back(view.class_log_count(order[i]));
  MaxSmoothing out;
  out.bits = log2_minus(log2_sum_exp2(kept), log2_partial);
  if (out.bits < 0.0) out.bits = 0.0;
  return out;
}

// ---------------------------------------------------------------------------

MinSmoothing min_smoothing(const ExplicitDistribution& p, double eps) {
  check_epsilon(eps);
  std::vector<double> desc;
  desc.reserve(p.support_size());
  for (const Entry& e : p.support()) desc.push_back(e.prob);
  std::sort(desc.begin(), desc.end(), std::greater<>());

  // On the segment where exactly the top j entries exceed lambda,
  // sum_{i<j} (p_i - lambda) = eps gives lambda = (S_j - eps) / j.
  double lambda = desc.front();
  double top_sum = 0.0;
  for (std::size_t j = 0; j < desc.size(); ++j) {
    top_sum += desc[j];
    const double candidate = (top_sum - eps) / static_cast<double>(j + 1);
    const double next = j + 1 < desc.size() ? desc[j + 1] : 0.0;
    if (candidate >= next) {
      lambda = candidate;
      break;
    }
  }

  MinSmoothing out;
  std::vector<Entry> shaved;
  shaved.reserve(p.support_size());
  double removed = 0.0;
  for (const Entry& e : p.support()) {
    if (e.prob > lambda) {
      removed += e.prob - lambda;
      shaved.push_back({e.index, lambda});
    } else {
      shaved.push_back(e);
    }
  }
  out.bits = -std::log2(lambda);
  out.cut = {LogProb::from_prob(lambda), removed};
  out.witness = ExplicitDistribution::subnormalized(p.bits(), std::move(shaved));
  return out;
}

MinSmoothing min_smoothing(const TypeClassView& view, double eps) {
  check_epsilon(eps);
  const double top = -h_min(view);
  MinSmoothing out;
  if (eps == 0.0) {
    out.bits = -top;
    out.cut = {LogProb::from_log2(top), 0.0};
    return out;
  }

  // Mass above level 2^level, removed by shaving down to it.
  auto shaved_mass = [&](double level) {
    double total = 0.0;
    for (std::size_t k = 0; k < view.classes(); ++k) {
      const double lp = view.class_log_prob(k);
      if (!(lp > level)) continue;
      total += std::exp2(view.class_log_mass(k)) *
               -std::expm1(std::numbers::ln2 * (level - lp));
    }
    return total;
  };

  // Root lies in [log2((1 - eps) / |supp|), log2 p_max].
  double lo = std::log2(1.0 - eps) - h_max(view) - 1.0;
  double hi = top;
  for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (shaved_mass(mid) > eps) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double level = 0.5 * (lo + hi);
  out.bits = -level;
  out.cut = {LogProb::from_log2(level), shaved_mass(level)};
  return out;
}

// ---------------------------------------------------------------------------

EntropyReport smooth_report(const ExplicitDistribution& p, double eps) {
  EntropyReport r;
  r.n = p.bits();
  r.shannon = shannon(p);
  r.h_min = h_min(p);
  r.h_max = h_max(p);
  r.epsilon = eps;
  r.h_min_smooth = h_min_smooth(p, eps);
  r.h_max_smooth = h_max_smooth(p, eps);
  return r;
}

EntropyReport smooth_report(const TypeClassView& view, double eps) {
  EntropyReport r;
  r.n = view.bits();
  r.shannon = shannon(view);
  r.h_min = h_min(view);
  r.h_max = h_max(view);
  r.epsilon = eps;
  r.h_min_smooth = h_min_smooth(view, eps);
  r.h_max_smooth = h_max_smooth(view, eps);
  return r;
}

}  // namespace szilard
