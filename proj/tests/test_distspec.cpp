#include <gtest/gtest.h>

#include "szilard/distspec.hpp"
#include "szilard/rng.hpp"

using namespace szilard;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorCode::InvariantViolation;
}

std::string random_lr(Rng& rng, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += rng.below(2) ? 'R' : 'L';
  return s;
}

Term random_term(Rng& rng, std::size_t n) {
  switch (rng.below(4)) {
    case 0:
      return BernoulliTerm{rng.uniform(), n};
    case 1:
      return DetTerm{random_lr(rng, n)};
    case 2:
      return UniformTerm{n};
    default: {
      ExplicitTerm t;
      const std::size_t k = 1 + rng.below(4);
      for (std::size_t i = 0; i < k; ++i) t.pairs.emplace_back(random_lr(rng, n), rng.uniform());
      return t;
    }
  }
}

}  // namespace

TEST(Parse, RowThreeMixture) {
  const DistSpec s = parse_spec("mix(0.5: bernoulli(1.0)^20, 0.5: bernoulli(0.5)^20)");
  ASSERT_TRUE(s.is_mixture);
  ASSERT_EQ(s.terms.size(), 2u);
  EXPECT_EQ(s.terms[0], (WeightedTerm{0.5, BernoulliTerm{1.0, 20}}));
  EXPECT_EQ(s.terms[1], (WeightedTerm{0.5, BernoulliTerm{0.5, 20}}));
  EXPECT_EQ(s.bits(), 20u);
  const auto& m = std::get<MixtureOfProducts>(resolve(s));
  EXPECT_EQ(m.bits(), 20u);
}

TEST(Parse, DetIsPointMass) {
  const ExplicitDistribution p = tabulate(resolve(parse_spec("det(LR)")));
  EXPECT_EQ(p.support_size(), 1u);
  EXPECT_EQ(p.prob(Outcome::parse("LR")), 1.0);
}

TEST(Parse, ExplicitAndWhitespace) {
  const DistSpec s = parse_spec("  explicit{ LL : 0.5 ,\n RR:0.5 }  ");
  const ExplicitDistribution p = tabulate(resolve(s));
  EXPECT_EQ(p.prob(Outcome::parse("RR")), 0.5);
}

TEST(Parse, MixedMixtureIsTabulated) {
  const ResolvedDistribution d = resolve(parse_spec("mix(0.5: det(LR), 0.5: uniform^2)"));
  ASSERT_TRUE(std::holds_alternative<ExplicitDistribution>(d));
  EXPECT_DOUBLE_EQ(std::get<ExplicitDistribution>(d).prob(Outcome::parse("LR")), 0.625);
}

TEST(Parse, ConstantDetStaysStructured) {
  const ResolvedDistribution d = resolve(parse_spec("det(RRRRRRRRRRRRRRRRRRRRRRRRRRRRRRRRRRRRRRRR)"));
  EXPECT_TRUE(std::holds_alternative<MixtureOfProducts>(d));
}

TEST(Parse, Errors) {
  EXPECT_EQ(code_of("bernoulli(1.2)^5"), ErrorCode::ProbabilityOutOfRange);
  EXPECT_EQ(code_of("bernoulli(0.5)^0"), ErrorCode::ParseError);
  EXPECT_EQ(code_of("mix(0.5: uniform^2)"), ErrorCode::ParseError);
  EXPECT_EQ(code_of("mix(0.5: uniform^2, 0.5: uniform^3)"), ErrorCode::ArityMismatch);
  EXPECT_EQ(code_of("mix(0.5: uniform^2, 0.4: uniform^2)"), ErrorCode::WeightSumError);
  EXPECT_EQ(code_of("explicit{LL:0.5, R:0.5}"), ErrorCode::ArityMismatch);
  EXPECT_EQ(code_of("det()"), ErrorCode::ParseError);
  EXPECT_EQ(code_of("uniform^3 junk"), ErrorCode::ParseError);
  EXPECT_EQ(code_of("gaussian(0,1)"), ErrorCode::ParseError);
}

TEST(Parse, ErrorPosition) {
  try {
    parse_spec("mix(0.5: uniform^2,\n  0.5: uniform^)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 16u);
    EXPECT_EQ(e.expected(), "positive integer");
  }
}

TEST(Parse, NormalizationCheckedOnResolve) {
  EXPECT_THROW(resolve(parse_spec("explicit{LL:0.6, RR:0.5}")), Error);
}

TEST(PrettyPrint, RoundTrip) {
  Rng rng(41);
  const double weight_sets[][3] = {{1.0, 0, 0}, {0.5, 0.5, 0}, {0.25, 0.25, 0.5}, {0.125, 0.375, 0.5}};
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng.below(8);
    const auto& w = weight_sets[rng.below(4)];
    DistSpec s;
    s.is_mixture = w[1] > 0;
    for (double x : w) {
      if (x > 0) s.terms.push_back({x, random_term(rng, n)});
    }
    const std::string text = pretty_print(s);
    EXPECT_EQ(parse_spec(text), s) << text;
  }
}
