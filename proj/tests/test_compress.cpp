#include <gtest/gtest.h>

#include "random_instances.hpp"
#include "szilard/compress.hpp"
#include "szilard/entropy.hpp"
#include "szilard/error.hpp"

using namespace szilard;

namespace {

ExplicitDistribution bell_pair() {
  return ExplicitDistribution::from_entries(2, {{0b00, 0.5}, {0b11, 0.5}});
}

const BitClass kKnownL{BitLabel::Known, false};
const BitClass kUniform{BitLabel::Uniform, false};

}  // namespace

TEST(Canonical, BellPairCompactsToKnownPlusUniform) {
  const auto plan = canonical_permutation(bell_pair());
  const auto q = compress(bell_pair(), plan);
  EXPECT_EQ(q.prob(0b00), 0.5);
  EXPECT_EQ(q.prob(0b01), 0.5);
  EXPECT_EQ(plan.profile, (BitProfile{kKnownL, kUniform}));
  EXPECT_EQ(bit_profile(q), plan.profile);
}

TEST(Canonical, SortedInputGivesIdentity) {
  const auto p = ExplicitDistribution::from_entries(2, {{0, 0.4}, {1, 0.3}, {2, 0.2}, {3, 0.1}});
  EXPECT_TRUE(canonical_permutation(p).permutation->is_identity());
}

TEST(Canonical, WorkedExampleInThreeBoxes) {
  const auto p = ExplicitDistribution::from_entries(
      3, {{0, 0.5}, {1, 0.49998}, {2, 0.00001}, {3, 0.00001}, {4, 0.0}});
  const auto plan = canonical_permutation(p);
  const auto q = compress(p, plan);
  for (const Entry& e : q.support()) EXPECT_LT(e.index, 4u);
  EXPECT_EQ(plan.profile.front(), kKnownL);
  EXPECT_EQ(plan.profile[1].label, BitLabel::Biased);
}

TEST(Canonical, ReversedInputIsSorted) {
  const auto p = ExplicitDistribution::from_entries(2, {{0, 0.1}, {1, 0.2}, {2, 0.3}, {3, 0.4}});
  const auto q = compress(p, canonical_permutation(p));
  EXPECT_EQ(q.prob(0), 0.4);
  EXPECT_EQ(q.prob(3), 0.1);
}

TEST(Canonical, PropertiesOnRandomInputs) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = testgen::random_distribution(rng, 1, 7);
    const auto plan = canonical_permutation(p);
    const auto q = compress(p, plan);
    // Compaction onto 0..k-1 in non-increasing order.
    ASSERT_EQ(q.support().size(), p.support().size());
    for (std::size_t i = 0; i < q.support().size(); ++i) {
      EXPECT_EQ(q.support()[i].index, i);
      if (i > 0) EXPECT_LE(q.support()[i].prob, q.support()[i - 1].prob);
    }
    // Entropies are invariant.
    EXPECT_NEAR(shannon(q), shannon(p), 1e-12);
    EXPECT_EQ(h_min(q), h_min(p));
    EXPECT_EQ(h_max(q), h_max(p));
    // Idempotent.
    EXPECT_TRUE(canonical_permutation(q).permutation->is_identity());
    EXPECT_EQ(bit_profile(q), plan.profile);
  }
}

TEST(BitProfile, Examples) {
  EXPECT_EQ(bit_profile(point_mass(Outcome::parse("LRL"))),
            (BitProfile{kKnownL, {BitLabel::Known, true}, kKnownL}));
  const auto b = explicit_of(iid(2, 0.7));
  const auto q = compress(b, canonical_permutation(b));
  const auto profile = bit_profile(q);
  EXPECT_TRUE(std::any_of(profile.begin(), profile.end(),
                          [](const BitClass& c) { return c.label == BitLabel::Biased; }));
}

TEST(Bennett, Examples) {
  EXPECT_EQ(bennett_work({kKnownL, kUniform}, 3.0), 3.0);
  EXPECT_EQ(bennett_work({kKnownL, kKnownL, kKnownL}, 2.0), 6.0);
  EXPECT_EQ(bennett_work({kUniform, kUniform}, 2.0), 0.0);
  EXPECT_THROW(bennett_work({kKnownL, {BitLabel::Biased, false}}, 1.0), Error);
}

TEST(Bennett, MatchesSmoothEntropyWhenNoBiasedBits) {
  // Uniform over a subset of size 2^k in n boxes.
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    const std::size_t k = rng.below(n + 1);
    std::vector<std::uint64_t> idx(std::size_t{1} << n);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < (std::size_t{1} << k); ++i) {
      entries.push_back({idx[i], std::ldexp(1.0, -static_cast<int>(k))});
    }
    std::sort(entries.begin(), entries.end(), [](auto& a, auto& b) { return a.index < b.index; });
    const auto p = ExplicitDistribution::from_entries(n, entries);
    const auto plan = canonical_permutation(p);
    EXPECT_DOUBLE_EQ(bennett_work(plan.profile, 1.0), static_cast<double>(n) - h_max_smooth(p, 0.0));
  }
}

TEST(Cnot, BellPair) {
  const auto q = apply_cnot(bell_pair(), 0, 1);
  EXPECT_EQ(q.prob(Outcome::parse("LL")), 0.5);
  EXPECT_EQ(q.prob(Outcome::parse("RL")), 0.5);
  EXPECT_EQ(q.support_size(), 2u);
}

TEST(Cnot, InvolutionAndEntropy) {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = testgen::random_distribution(rng, 2, 6);
    const std::size_t a = rng.below(p.bits());
    std::size_t b = rng.below(p.bits() - 1);
    if (b >= a) ++b;
    const auto q = apply_cnot(p, a, b);
    EXPECT_EQ(apply_cnot(q, a, b), p);
    EXPECT_NEAR(shannon(q), shannon(p), 1e-12);
  }
}

TEST(Cnot, Errors) {
  EXPECT_THROW(apply_cnot(bell_pair(), 0, 0), Error);
  EXPECT_THROW(apply_cnot(bell_pair(), 0, 2), Error);
}

TEST(Plan, SymbolicPlanHasNoTable) {
  const auto plan = symbolic_plan(1000);
  EXPECT_TRUE(plan.symbolic());
  EXPECT_THROW(compress(bell_pair(), plan), Error);
}
