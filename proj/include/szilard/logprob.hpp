#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>

namespace szilard {

/// Nonnegative real stored as its base-2 logarithm; -inf encodes zero.
class LogProb {
 public:
  constexpr LogProb() = default;

  static LogProb from_log2(double log2_value) { return LogProb(log2_value); }
  static LogProb from_prob(double p) {
    return LogProb(p > 0.0 ? std::log2(p) : -std::numeric_limits<double>::infinity());
  }
  static constexpr LogProb zero() { return LogProb(); }
  static constexpr LogProb one() { return LogProb(0.0); }

  double log2() const { return log2_; }
  double value() const { return std::exp2(log2_); }
  bool is_zero() const { return std::isinf(log2_) && log2_ < 0; }

  friend LogProb operator*(LogProb a, LogProb b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return LogProb(a.log2_ + b.log2_);
  }
  friend LogProb operator/(LogProb a, LogProb b) {
    if (a.is_zero()) return zero();
    return LogProb(a.log2_ - b.log2_);
  }
  friend LogProb operator+(LogProb a, LogProb b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const double hi = std::max(a.log2_, b.log2_);
    const double lo = std::min(a.log2_, b.log2_);
    return LogProb(hi + std::log1p(std::exp2(lo - hi)) / std::numbers::ln2);
  }

  friend bool operator==(LogProb a, LogProb b) { return a.log2_ == b.log2_; }
  friend auto operator<=>(LogProb a, LogProb b) { return a.log2_ <=> b.log2_; }

 private:
  constexpr explicit LogProb(double l) : log2_(l) {}
  double log2_ = -std::numeric_limits<double>::infinity();
};

/// log2(sum_i 2^{x_i}) with max subtraction; -inf for an empty or all -inf input.
inline double log2_sum_exp2(std::span<const double> xs) {
  double hi = -std::numeric_limits<double>::infinity();
  for (double x : xs) hi = std::max(hi, x);
  if (std::isinf(hi)) return hi;
  double acc = 0.0;
  for (double x : xs) acc += std::exp2(x - hi);
  return hi + std::log2(acc);
}

/// log2 of the binomial coefficient C(n, k) via log-gamma.
inline double log2_binomial(std::size_t n, std::size_t k) {
  if (k > n) return -std::numeric_limits<double>::infinity();
  if (k == 0 || k == n) return 0.0;
  if (n <= 62) {
    // Exact product; each partial C(n-k+i, i) is an integer below 2^63.
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (std::size_t i = 1; i <= k; ++i) c = c / i * (n - k + i) + c % i * (n - k + i) / i;
    return std::log2(static_cast<double>(c));
  }
  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  return (std::lgamma(nn + 1.0) - std::lgamma(kk + 1.0) - std::lgamma(nn - kk + 1.0)) /
         std::numbers::ln2;
}

}  // namespace szilard
