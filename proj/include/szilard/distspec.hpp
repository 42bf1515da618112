#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "szilard/error.hpp"
#include "szilard/probdist.hpp"

namespace szilard {

// Grammar:
//   spec   := term | "mix(" wterm ("," wterm)+ ")"
//   wterm  := number ":" term
//   term   := "bernoulli(" number ")" "^" integer | "det(" [LR]+ ")"
//           | "uniform" "^" integer | "explicit{" pair ("," pair)* "}"
//   pair   := [LR]+ ":" number
// Whitespace is allowed between tokens.

struct BernoulliTerm {
  double left_prob;
  std::size_t n;
  friend bool operator==(const BernoulliTerm&, const BernoulliTerm&) = default;
};

struct DetTerm {
  std::string bits;
  friend bool operator==(const DetTerm&, const DetTerm&) = default;
};

struct UniformTerm {
  std::size_t n;
  friend bool operator==(const UniformTerm&, const UniformTerm&) = default;
};

struct ExplicitTerm {
  std::vector<std::pair<std::string, double>> pairs;
  friend bool operator==(const ExplicitTerm&, const ExplicitTerm&) = default;
};

using Term = std::variant<BernoulliTerm, DetTerm, UniformTerm, ExplicitTerm>;

struct WeightedTerm {
  double weight;
  Term term;
  friend bool operator==(const WeightedTerm&, const WeightedTerm&) = default;
};

struct DistSpec {
  bool is_mixture = false;
  std::vector<WeightedTerm> terms;  // a single term has weight 1

  std::size_t bits() const;
  friend bool operator==(const DistSpec&, const DistSpec&) = default;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string expected);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

DistSpec parse_spec(std::string_view text);

/// Canonical text; parse_spec(pretty_print(s)) == s.
std::string pretty_print(const DistSpec& spec);

/// A spec lowered to the representation the library computes with.
/// Mixtures of i.i.d. terms stay structured; anything else is tabulated.
using ResolvedDistribution = std::variant<ExplicitDistribution, MixtureOfProducts>;

ResolvedDistribution resolve(const DistSpec& spec, std::uint64_t cap = kDefaultSupportCap);

/// Tabulates either representation.
ExplicitDistribution tabulate(const ResolvedDistribution& d, std::uint64_t cap = kDefaultSupportCap);

}  // namespace szilard
