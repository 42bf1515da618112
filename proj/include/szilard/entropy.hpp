#pragma once

#include <cstdint>
#include <optional>

#include "szilard/logprob.hpp"
#include "szilard/probdist.hpp"

namespace szilard {

/// Relative slack on the smoothing budget: mass m may be removed when
/// m <= eps * (1 + kBudgetSlack).
inline constexpr double kBudgetSlack = 1e-12;

double binary_entropy(double p);

double shannon(const ExplicitDistribution& p);
double shannon(const TypeClassView& view);

/// -log2 of the peak probability.
double h_min(const ExplicitDistribution& p);
double h_min(const TypeClassView& view);

/// log2 of the support size.
double h_max(const ExplicitDistribution& p);
double h_max(const TypeClassView& view);

/// Peak-shaving level: every entry above `lambda` is cut down to it.
struct CutLevel {
  LogProb lambda;
  double removed_mass = 0.0;
};

struct MaxSmoothing {
  double bits = 0.0;
  /// Retained support size. Exact on the explicit path, 0 on the type-class path.
  std::uint64_t retained = 0;
  std::optional<ExplicitDistribution> witness;
};

struct MinSmoothing {
  double bits = 0.0;
  CutLevel cut;
  std::optional<ExplicitDistribution> witness;
};

/// Smallest support reachable by deleting at most eps of mass. The least
/// likely outcomes go first; among equal probabilities the higher index goes
/// first.
MaxSmoothing max_smoothing(const ExplicitDistribution& p, double eps);
MaxSmoothing max_smoothing(const TypeClassView& view, double eps);

/// Lowest peak reachable by removing at most eps of mass: solves
/// sum_i max(p_i - lambda, 0) = eps.
MinSmoothing min_smoothing(const ExplicitDistribution& p, double eps);
MinSmoothing min_smoothing(const TypeClassView& view, double eps);

inline double h_max_smooth(const ExplicitDistribution& p, double eps) {
  return max_smoothing(p, eps).bits;
}
inline double h_max_smooth(const TypeClassView& view, double eps) {
  return max_smoothing(view, eps).bits;
}
inline double h_min_smooth(const ExplicitDistribution& p, double eps) {
  return min_smoothing(p, eps).bits;
}
inline double h_min_smooth(const TypeClassView& view, double eps) {
  return min_smoothing(view, eps).bits;
}

struct EntropyReport {
  std::size_t n = 0;
  double shannon = 0.0;
  double h_min = 0.0;
  double h_max = 0.0;
  double epsilon = 0.0;
  double h_min_smooth = 0.0;
  double h_max_smooth = 0.0;
};

EntropyReport smooth_report(const ExplicitDistribution& p, double eps);
EntropyReport smooth_report(const TypeClassView& view, double eps);

/// Throws BadEpsilon unless 0 <= eps < 1.
void check_epsilon(double eps);

}  // namespace szilard
