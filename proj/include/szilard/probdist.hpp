#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "szilard/logprob.hpp"
#include "szilard/rng.hpp"

namespace szilard {

/// Default bound on the number of outcomes an explicit table may hold.
inline constexpr std::uint64_t kDefaultSupportCap = std::uint64_t{1} << 24;

/// Widest outcome that still has a 64-bit index.
inline constexpr std::size_t kMaxExplicitBits = 62;

/// Normalization tolerance for constructed distributions.
inline constexpr double kNormalizationTolerance = 1e-9;

/// Bit `pos` (0 = leftmost) of a big-endian n-bit index. L = 0, R = 1.
constexpr bool index_bit(std::uint64_t index, std::size_t n, std::size_t pos) {
  return ((index >> (n - 1 - pos)) & 1U) != 0;
}

/// A microstate of n boxes: bit i is false for L and true for R.
class Outcome {
 public:
  explicit Outcome(std::vector<bool> bits);

  /// Parses a string over {L, R}.
  static Outcome parse(std::string_view text);
  static Outcome from_index(std::size_t n, std::uint64_t index);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<bool>& bits() const { return bits_; }

  /// Big-endian index; requires size() <= kMaxExplicitBits.
  std::uint64_t index() const;
  std::string to_string() const;

  friend bool operator==(const Outcome&, const Outcome&) = default;

 private:
  std::vector<bool> bits_;
};

struct Entry {
  std::uint64_t index;
  double prob;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Finite distribution over {L,R}^n stored as its support, sorted by index.
///
/// Entries with probability exactly zero are never stored. Ordinary
/// construction enforces normalization; `subnormalized` exists for smoothing
/// witnesses, whose mass may be anywhere in [0, 1].
class ExplicitDistribution {
 public:
  static ExplicitDistribution from_entries(std::size_t n, std::vector<Entry> entries,
                                           std::uint64_t cap = kDefaultSupportCap);
  static ExplicitDistribution subnormalized(std::size_t n, std::vector<Entry> entries);

  std::size_t bits() const { return n_; }
  std::span<const Entry> support() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }

  double prob(std::uint64_t index) const;
  double prob(const Outcome& x) const { return prob(x.index()); }
  double mass() const;
  double peak() const;

  friend bool operator==(const ExplicitDistribution&, const ExplicitDistribution&) = default;

 private:
  ExplicitDistribution(std::size_t n, std::vector<Entry> entries)
      : n_(n), entries_(std::move(entries)) {}

  std::size_t n_ = 0;
  std::vector<Entry> entries_;
};

ExplicitDistribution make_explicit(std::size_t n,
                                   std::span<const std::pair<Outcome, double>> entries,
                                   std::uint64_t cap = kDefaultSupportCap);

/// Point mass on a single outcome.
ExplicitDistribution point_mass(const Outcome& x);

/// Product distribution; outcome x||y has probability P(x) Q(y).
ExplicitDistribution tensor(const ExplicitDistribution& p, const ExplicitDistribution& q,
                            std::uint64_t cap = kDefaultSupportCap);

/// Distribution of the selected positions, in the order given.
ExplicitDistribution marginal(const ExplicitDistribution& p,
                              std::span<const std::size_t> positions);

/// Bijection on {0, ..., 2^n - 1}, stored densely.
class Permutation {
 public:
  Permutation(std::size_t n, std::vector<std::uint64_t> images);
  static Permutation identity(std::size_t n);

  std::size_t bits() const { return n_; }
  std::uint64_t operator()(std::uint64_t index) const { return images_[index]; }
  std::span<const std::uint64_t> images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> images_;
};

/// Relabels outcomes: the result assigns P(x) to pi(x).
ExplicitDistribution apply_permutation(const ExplicitDistribution& p, const Permutation& pi);

/// Mass removed going from P to Q: sum_x max(P(x) - Q(x), 0).
double statistical_distance(const ExplicitDistribution& p, const ExplicitDistribution& q);

// ---------------------------------------------------------------------------
// Mixtures of i.i.d. products and their type-class (Hamming weight) view.

/// Bernoulli(left_prob)^{(x) n}: each box independently L with probability left_prob.
struct IidProduct {
  std::size_t n;
  double left_prob;

  friend bool operator==(const IidProduct&, const IidProduct&) = default;
};

struct MixtureComponent {
  double weight;
  double left_prob;

  friend bool operator==(const MixtureComponent&, const MixtureComponent&) = default;
};

class MixtureOfProducts {
 public:
  std::size_t bits() const { return n_; }
  std::span<const MixtureComponent> components() const { return components_; }

  friend MixtureOfProducts mixture(std::span<const double> weights,
                                   std::span<const IidProduct> components);

 private:
  MixtureOfProducts(std::size_t n, std::vector<MixtureComponent> c)
      : n_(n), components_(std::move(c)) {}

  std::size_t n_;
  std::vector<MixtureComponent> components_;
};

MixtureOfProducts mixture(std::span<const double> weights, std::span<const IidProduct> components);

/// Single-component mixture.
MixtureOfProducts iid(std::size_t n, double left_prob);

/// Per-class description of a mixture: every string with k R's has the same
/// probability, so n + 1 numbers describe the whole distribution.
class TypeClassView {
 public:
  explicit TypeClassView(const MixtureOfProducts& m);

  std::size_t bits() const { return n_; }
  std::size_t classes() const { return n_ + 1; }

  /// log2 of the probability of one string with k R's.
  double class_log_prob(std::size_t k) const { return log_prob_[k]; }
  /// log2 C(n, k).
  double class_log_count(std::size_t k) const { return log_count_[k]; }
  /// log2 of the total mass of class k.
  double class_log_mass(std::size_t k) const { return log_count_[k] + log_prob_[k]; }
  bool class_in_support(std::size_t k) const;

  std::span<const double> log_probs() const { return log_prob_; }
  std::span<const double> log_counts() const { return log_count_; }

 private:
  std::size_t n_;
  std::vector<double> log_prob_;
  std::vector<double> log_count_;
};

TypeClassView to_type_classes(const MixtureOfProducts& m);

ExplicitDistribution explicit_of(const TypeClassView& view, std::uint64_t cap = kDefaultSupportCap);
ExplicitDistribution explicit_of(const MixtureOfProducts& m, std::uint64_t cap = kDefaultSupportCap);

// ---------------------------------------------------------------------------
// Sampling.

/// Inverse-CDF sampler over an explicit support; build once, draw many.
class OutcomeSampler {
 public:
  explicit OutcomeSampler(const ExplicitDistribution& p);
  std::uint64_t operator()(Rng& rng) const;

 private:
  std::vector<std::uint64_t> indices_;
  std::vector<double> cumulative_;
};

/// Draws a class by mass, then a uniformly random member of it.
class TypeClassSampler {
 public:
  explicit TypeClassSampler(const TypeClassView& view);
  Outcome operator()(Rng& rng) const;

 private:
  std::size_t n_;
  std::vector<std::size_t> classes_;
  std::vector<double> cumulative_;
};

Outcome sample(const ExplicitDistribution& p, Rng& rng);
Outcome sample(const TypeClassView& view, Rng& rng);

}  // namespace szilard
