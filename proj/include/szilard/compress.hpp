#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "szilard/probdist.hpp"

namespace szilard {

enum class BitLabel { Known, Biased, Uniform };

struct BitClass {
  BitLabel label;
  bool value = false;  // fixed value of a Known bit (false = L)

  friend bool operator==(const BitClass&, const BitClass&) = default;
};

using BitProfile = std::vector<BitClass>;

/// Reversible relabeling chosen before extraction, together with the
/// resulting per-bit picture. A symbolic plan carries no table; it stands for
/// the canonical relabeling of a distribution too large to tabulate.
struct CompressionPlan {
  std::size_t n = 0;
  std::optional<Permutation> permutation;
  BitProfile profile;

  bool symbolic() const { return !permutation.has_value(); }
};

CompressionPlan symbolic_plan(std::size_t n);

/// Plan built from an arbitrary relabeling; the profile is left empty.
CompressionPlan plan_from_permutation(Permutation pi);

/// Sorts outcomes by non-increasing probability (ties by index) onto
/// 0, 1, 2, ...; zero-probability outcomes follow in index order.
CompressionPlan canonical_permutation(const ExplicitDistribution& p,
                                      std::uint64_t cap = kDefaultSupportCap);

/// The distribution after the plan has been applied.
ExplicitDistribution compress(const ExplicitDistribution& p, const CompressionPlan& plan);

/// Known if the bit's marginal is a point mass, Uniform if it is (1/2, 1/2)
/// within 1e-12, else Biased.
BitProfile bit_profile(const ExplicitDistribution& p);

/// (n - #uniform) * c. Throws BiasedBitsPresent when any bit is biased.
double bennett_work(const BitProfile& profile, double c);

/// Flips `target` on outcomes where `control` is R.
ExplicitDistribution apply_cnot(const ExplicitDistribution& p, std::size_t control,
                                std::size_t target);

}  // namespace szilard
