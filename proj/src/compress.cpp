#include "szilard/compress.hpp"

#include <algorithm>
#include <cmath>

#include "szilard/error.hpp"

namespace szilard {

CompressionPlan symbolic_plan(std::size_t n) {
  CompressionPlan plan;
  plan.n = n;
  return plan;
}

CompressionPlan plan_from_permutation(Permutation pi) {
  CompressionPlan plan;
  plan.n = pi.bits();
  plan.permutation = std::move(pi);
  return plan;
}

CompressionPlan canonical_permutation(const ExplicitDistribution& p, std::uint64_t cap) {
  const std::size_t n = p.bits();
  if (n > kMaxExplicitBits || (std::uint64_t{1} << n) > cap) {
    throw Error(ErrorCode::SupportOverflow, "cannot tabulate a permutation of 2^" +
                                                std::to_string(n) + " outcomes");
  }
  std::vector<Entry> order(p.support().begin(), p.support().end());
  std::stable_sort(order.begin(), order.end(),
                   [](const Entry& a, const Entry& b) { return a.prob > b.prob; });

  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::uint64_t> images(size);
  std::uint64_t next = 0;
  for (const Entry& e : order) images[e.index] = next++;
  auto support = p.support();
  auto it = support.begin();
  for (std::uint64_t x = 0; x < size; ++x) {
    if (it != support.end() && it->index == x) {
      ++it;
      continue;
    }
    images[x] = next++;
  }

  CompressionPlan plan = plan_from_permutation(Permutation(n, std::move(images)));
  plan.profile = bit_profile(apply_permutation(p, *plan.permutation));
  return plan;
}

ExplicitDistribution compress(const ExplicitDistribution& p, const CompressionPlan& plan) {
  if (plan.symbolic()) throw Error(ErrorCode::SymbolicPlan, "plan has no permutation table");
  return apply_permutation(p, *plan.permutation);
}

BitProfile bit_profile(const ExplicitDistribution& p) {
  const std::size_t n = p.bits();
  std::vector<double> ones(n, 0.0);
  std::vector<double> zeros(n, 0.0);
  for (const Entry& e : p.support()) {
    for (std::size_t i = 0; i < n; ++i) (index_bit(e.index, n, i) ? ones : zeros)[i] += e.prob;
  }
  BitProfile profile(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (ones[i] == 0.0) {
      profile[i] = {BitLabel::Known, false};
    } else if (zeros[i] == 0.0) {
      profile[i] = {BitLabel::Known, true};
    } else if (std::abs(zeros[i] - ones[i]) <= 1e-12) {
      profile[i] = {BitLabel::Uniform};
    } else {
      profile[i] = {BitLabel::Biased};
    }
  }
  return profile;
}

double bennett_work(const BitProfile& profile, double c) {
  std::size_t uniform = 0;
  for (const BitClass& b : profile) {
    if (b.label == BitLabel::Biased) {
      throw Error(ErrorCode::BiasedBitsPresent,
                  "Bennett's formula needs every bit known or uniform");
    }
    if (b.label == BitLabel::Uniform) ++uniform;
  }
  return static_cast<double>(profile.size() - uniform) * c;
}

ExplicitDistribution apply_cnot(const ExplicitDistribution& p, std::size_t control,
                                std::size_t target) {
  const std::size_t n = p.bits();
  if (control >= n || target >= n) throw Error(ErrorCode::IndexOutOfRange, "CNOT position");
  if (control == target) throw Error(ErrorCode::SamePosition, "control equals target");
  const std::uint64_t flip = std::uint64_t{1} << (n - 1 - target);
  std::vector<Entry> out;
  out.reserve(p.support_size());
  for (const Entry& e : p.support()) {
    out.push_back({index_bit(e.index, n, control) ? e.index ^ flip : e.index, e.prob});
  }
  return ExplicitDistribution::subnormalized(n, std::move(out));
}

}  // namespace szilard
