#include "szilard/probdist.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "szilard/error.hpp"

namespace szilard {

namespace {

void check_explicit_width(std::size_t n) {
  if (n == 0 || n > kMaxExplicitBits) {
    throw Error(ErrorCode::BadOutcomeLength,
                "explicit outcomes need 1.." + std::to_string(kMaxExplicitBits) + " bits, got " +
                    std::to_string(n));
  }
}

void check_normalized(double total) {
  if (!(std::abs(total - 1.0) <= kNormalizationTolerance)) {
    throw Error(ErrorCode::NotNormalized,
                "probabilities sum to " + std::to_string(total) + ", expected 1");
  }
}

// Sorts by index, rejects duplicates and drops zeros.
std::vector<Entry> canonicalize(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].index == entries[i - 1].index) {
      throw Error(ErrorCode::DuplicateOutcome, "outcome listed twice");
    }
  }
  std::erase_if(entries, [](const Entry& e) { return e.prob == 0.0; });
  return entries;
}

}  // namespace

// ---------------------------------------------------------------------------

Outcome::Outcome(std::vector<bool> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw Error(ErrorCode::BadOutcomeLength, "outcome must have at least one bit");
}

Outcome Outcome::parse(std::string_view text) {
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch == 'L') {
      bits.push_back(false);
    } else if (ch == 'R') {
      bits.push_back(true);
    } else {
      throw Error(ErrorCode::InvalidArgument, std::string("outcome character '") + ch +
                                                  "' is not L or R");
    }
  }
  return Outcome(std::move(bits));
}

Outcome Outcome::from_index(std::size_t n, std::uint64_t index) {
  check_explicit_width(n);
  std::vector<bool> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = index_bit(index, n, i);
  return Outcome(std::move(bits));
}

std::uint64_t Outcome::index() const {
  check_explicit_width(bits_.size());
  std::uint64_t idx = 0;
  for (bool b : bits_) idx = (idx << 1) | (b ? 1U : 0U);
  return idx;
}

std::string Outcome::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (bool b : bits_) s.push_back(b ? 'R' : 'L');
  return s;
}

// ---------------------------------------------------------------------------

ExplicitDistribution ExplicitDistribution::from_entries(std::size_t n, std::vector<Entry> entries,
                                                        std::uint64_t cap) {
  check_explicit_width(n);
  const std::uint64_t limit = std::uint64_t{1} << n;
  double total = 0.0;
  for (const Entry& e : entries) {
    if (e.index >= limit) throw Error(ErrorCode::BadOutcomeLength, "outcome index exceeds 2^n");
    if (!(e.prob >= 0.0)) throw Error(ErrorCode::NegativeProbability, "negative probability");
    total += e.prob;
  }
  check_normalized(total);
  entries = canonicalize(std::move(entries));
  if (entries.size() > cap) throw Error(ErrorCode::SupportOverflow, "support exceeds cap");
  return ExplicitDistribution(n, std::move(entries));
}

ExplicitDistribution ExplicitDistribution::subnormalized(std::size_t n, std::vector<Entry> entries) {
  check_explicit_width(n);
  double total = 0.0;
  for (const Entry& e : entries) {
    if (!(e.prob >= 0.0)) throw Error(ErrorCode::NegativeProbability, "negative probability");
    total += e.prob;
  }
  if (total > 1.0 + kNormalizationTolerance) {
    throw Error(ErrorCode::NotNormalized, "subnormalized mass exceeds 1");
  }
  return ExplicitDistribution(n, canonicalize(std::move(entries)));
}

double ExplicitDistribution::prob(std::uint64_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::uint64_t i) { return e.index < i; });
  return (it != entries_.end() && it->index == index) ? it->prob : 0.0;
}

double ExplicitDistribution::mass() const {
  double total = 0.0;
  for (const Entry& e : entries_) total += e.prob;
  return total;
}

double ExplicitDistribution::peak() const {
  double best = 0.0;
  for (const Entry& e : entries_) best = std::max(best, e.prob);
  return best;
}

ExplicitDistribution make_explicit(std::size_t n,
                                   std::span<const std::pair<Outcome, double>> entries,
                                   std::uint64_t cap) {
  check_explicit_width(n);
  std::vector<Entry> raw;
  raw.reserve(entries.size());
  for (const auto& [x, p] : entries) {
    if (x.size() != n) {
      throw Error(ErrorCode::BadOutcomeLength, "outcome " + x.to_string() + " does not have " +
                                                   std::to_string(n) + " bits");
    }
    raw.push_back({x.index(), p});
  }
  return ExplicitDistribution::from_entries(n, std::move(raw), cap);
}

ExplicitDistribution point_mass(const Outcome& x) {
  return ExplicitDistribution::from_entries(x.size(), {{x.index(), 1.0}});
}

ExplicitDistribution tensor(const ExplicitDistribution& p, const ExplicitDistribution& q,
                            std::uint64_t cap) {
  const std::size_t n = p.bits() + q.bits();
  if (n > kMaxExplicitBits) throw Error(ErrorCode::SupportOverflow, "tensor product too wide");
  const auto size = static_cast<unsigned __int128>(p.support_size()) * q.support_size();
  if (size > cap) throw Error(ErrorCode::SupportOverflow, "tensor support exceeds cap");
  std::vector<Entry> out;
  out.reserve(static_cast<std::size_t>(size));
  for (const Entry& a : p.support()) {
    for (const Entry& b : q.support()) {
      out.push_back({(a.index << q.bits()) | b.index, a.prob * b.prob});
    }
  }
  // Already sorted by index; underflowed products are dropped by the factory.
  return ExplicitDistribution::subnormalized(n, std::move(out));
}

ExplicitDistribution marginal(const ExplicitDistribution& p,
                              std::span<const std::size_t> positions) {
  if (positions.empty()) throw Error(ErrorCode::EmptySubset, "marginal over no positions");
  const std::size_t n = p.bits();
  std::vector<bool> seen(n, false);
  for (std::size_t pos : positions) {
    if (pos >= n) throw Error(ErrorCode::IndexOutOfRange, "position " + std::to_string(pos));
    if (seen[pos]) throw Error(ErrorCode::DuplicatePosition, "position " + std::to_string(pos));
    seen[pos] = true;
  }
  const std::size_t m = positions.size();
  std::vector<Entry> out;
  out.reserve(p.support_size());
  for (const Entry& e : p.support()) {
    std::uint64_t key = 0;
    for (std::size_t pos : positions) key = (key << 1) | (index_bit(e.index, n, pos) ? 1U : 0U);
    out.push_back({key, e.prob});
  }
  std::sort(out.begin(), out.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  std::vector<Entry> merged;
  for (const Entry& e : out) {
    if (!merged.empty() && merged.back().index == e.index) {
      merged.back().prob += e.prob;
    } else {
      merged.push_back(e);
    }
  }
  return ExplicitDistribution::subnormalized(m, std::move(merged));
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::size_t n, std::vector<std::uint64_t> images)
    : n_(n), images_(std::move(images)) {
  check_explicit_width(n);
  if (n >= 63 || images_.size() != (std::uint64_t{1} << n)) {
    throw Error(ErrorCode::NotBijective, "permutation must list 2^n images");
  }
  std::vector<bool> hit(images_.size(), false);
  for (std::uint64_t y : images_) {
    if (y >= images_.size() || hit[y]) throw Error(ErrorCode::NotBijective, "not a bijection");
    hit[y] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  check_explicit_width(n);
  std::vector<std::uint64_t> images(std::uint64_t{1} << n);
  std::iota(images.begin(), images.end(), std::uint64_t{0});
  return Permutation(n, std::move(images));
}

bool Permutation::is_identity() const {
  for (std::uint64_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint64_t> inv(images_.size());
  for (std::uint64_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(n_, std::move(inv));
}

ExplicitDistribution apply_permutation(const ExplicitDistribution& p, const Permutation& pi) {
  if (pi.bits() != p.bits()) throw Error(ErrorCode::ArityMismatch, "permutation width differs");
  std::vector<Entry> out;
  out.reserve(p.support_size());
  for (const Entry& e : p.support()) out.push_back({pi(e.index), e.prob});
  return ExplicitDistribution::subnormalized(p.bits(), std::move(out));
}

double statistical_distance(const ExplicitDistribution& p, const ExplicitDistribution& q) {
  if (p.bits() != q.bits()) throw Error(ErrorCode::ArityMismatch, "distributions differ in n");
  double removed = 0.0;
  auto qi = q.support().begin();
  const auto qend = q.support().end();
  for (const Entry& e : p.support()) {
    while (qi != qend && qi->index < e.index) ++qi;
    const double other = (qi != qend && qi->index == e.index) ? qi->prob : 0.0;
    removed += std::max(e.prob - other, 0.0);
  }
  return removed;
}

// ---------------------------------------------------------------------------

MixtureOfProducts mixture(std::span<const double> weights, std::span<const IidProduct> components) {
  if (weights.size() != components.size() || components.empty()) {
    throw Error(ErrorCode::InvalidArgument, "need one weight per component");
  }
  const std::size_t n = components.front().n;
  if (n == 0) throw Error(ErrorCode::BadOutcomeLength, "product over zero boxes");
  double total = 0.0;
  std::vector<MixtureComponent> out;
  for (std::size_t j = 0; j < components.size(); ++j) {
    if (components[j].n != n) throw Error(ErrorCode::MixedArity, "components differ in n");
    const double q = components[j].left_prob;
    if (!(q >= 0.0 && q <= 1.0)) {
      throw Error(ErrorCode::ProbabilityOutOfRange, "left probability outside [0, 1]");
    }
    if (!(weights[j] > 0.0 && weights[j] <= 1.0)) {
      throw Error(ErrorCode::WeightSumError, "weights must lie in (0, 1]");
    }
    total += weights[j];
    out.push_back({weights[j], q});
  }
  if (!(std::abs(total - 1.0) <= 1e-12)) {
    throw Error(ErrorCode::WeightSumError, "weights sum to " + std::to_string(total));
  }
  return MixtureOfProducts(n, std::move(out));
}

MixtureOfProducts iid(std::size_t n, double left_prob) {
  const double w = 1.0;
  const IidProduct c{n, left_prob};
  return mixture({&w, 1}, {&c, 1});
}

namespace {

// count * log2(p) with the 0 log 0 = 0 convention.
double scaled_log2(double count, double p) {
  if (count == 0.0) return 0.0;
  return count * std::log2(p);
}

}  // namespace

TypeClassView::TypeClassView(const MixtureOfProducts& m)
    : n_(m.bits()), log_prob_(m.bits() + 1), log_count_(m.bits() + 1) {
  std::vector<double> terms;
  for (std::size_t k = 0; k <= n_; ++k) {
    terms.clear();
    const auto lefts = static_cast<double>(n_ - k);
    const auto rights = static_cast<double>(k);
    for (const MixtureComponent& c : m.components()) {
      terms.push_back(std::log2(c.weight) + scaled_log2(lefts, c.left_prob) +
                      scaled_log2(rights, 1.0 - c.left_prob));
    }
    log_prob_[k] = log2_sum_exp2(terms);
    log_count_[k] = log2_binomial(n_, k);
  }
}

bool TypeClassView::class_in_support(std::size_t k) const {
  return !std::isinf(log_prob_[k]);
}

TypeClassView to_type_classes(const MixtureOfProducts& m) { return TypeClassView(m); }

ExplicitDistribution explicit_of(const TypeClassView& view, std::uint64_t cap) {
  const std::size_t n = view.bits();
  if (n > kMaxExplicitBits || (std::uint64_t{1} << n) > cap) {
    throw Error(ErrorCode::SupportOverflow, "2^" + std::to_string(n) + " outcomes exceed cap");
  }
  std::vector<double> per_class(n + 1);
  for (std::size_t k = 0; k <= n; ++k) per_class[k] = std::exp2(view.class_log_prob(k));
  std::vector<Entry> entries;
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < size; ++x) {
    const double p = per_class[static_cast<std::size_t>(std::popcount(x))];
    if (p > 0.0) entries.push_back({x, p});
  }
  return ExplicitDistribution::from_entries(n, std::move(entries), cap);
}

ExplicitDistribution explicit_of(const MixtureOfProducts& m, std::uint64_t cap) {
  return explicit_of(TypeClassView(m), cap);
}

// ---------------------------------------------------------------------------

OutcomeSampler::OutcomeSampler(const ExplicitDistribution& p) {
  double acc = 0.0;
  for (const Entry& e : p.support()) {
    acc += e.prob;
    indices_.push_back(e.index);
    cumulative_.push_back(acc);
  }
}

std::uint64_t OutcomeSampler::operator()(Rng& rng) const {
  const double u = rng.uniform() * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) --it;
  return indices_[static_cast<std::size_t>(it - cumulative_.begin())];
}

TypeClassSampler::TypeClassSampler(const TypeClassView& view) : n_(view.bits()) {
  double acc = 0.0;
  for (std::size_t k = 0; k <= n_; ++k) {
    if (!view.class_in_support(k)) continue;
    const double mass = std::exp2(view.class_log_mass(k));
    if (mass <= 0.0) continue;
    acc += mass;
    classes_.push_back(k);
    cumulative_.push_back(acc);
  }
}

Outcome TypeClassSampler::operator()(Rng& rng) const {
  const double u = rng.uniform() * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) --it;
  const std::size_t k = classes_[static_cast<std::size_t>(it - cumulative_.begin())];
  // Partial Fisher-Yates: the first k slots of a shuffled position list get R.
  std::vector<std::size_t> positions(n_);
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  std::vector<bool> bits(n_, false);
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(n_ - i));
    std::swap(positions[i], positions[j]);
    bits[positions[i]] = true;
  }
  return Outcome(std::move(bits));
}

Outcome sample(const ExplicitDistribution& p, Rng& rng) {
  return Outcome::from_index(p.bits(), OutcomeSampler(p)(rng));
}

Outcome sample(const TypeClassView& view, Rng& rng) { return TypeClassSampler(view)(rng); }

}  // namespace szilard
