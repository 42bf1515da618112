#include "szilard/distspec.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>
#include <map>
#include <optional>

namespace szilard {

ParseError::ParseError(std::size_t line, std::size_t column, std::string expected)
    : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                       std::to_string(column) + ": expected " + expected),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

std::size_t term_bits(const Term& t) {
  return std::visit(
      [](const auto& v) -> std::size_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BernoulliTerm> || std::is_same_v<T, UniformTerm>) {
          return v.n;
        } else if constexpr (std::is_same_v<T, DetTerm>) {
          return v.bits.size();
        } else {
          return v.pairs.front().first.size();
        }
      },
      t);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  DistSpec parse() {
    DistSpec spec;
    skip_space();
    if (peek_word("mix")) {
      spec.is_mixture = true;
      expect("mix");
      expect("(");
      spec.terms.push_back(weighted_term());
      expect(",", "',' (a mixture needs at least two terms)");
      spec.terms.push_back(weighted_term());
      while (accept(",")) spec.terms.push_back(weighted_term());
      expect(")", "',' or ')'");
    } else {
      spec.terms.push_back({1.0, term()});
    }
    skip_space();
    if (pos_ != text_.size()) fail("end of input");
    check(spec);
    return spec;
  }

 private:
  WeightedTerm weighted_term() {
    const auto at = pos_;
    const double w = number();
    if (!(w > 0.0 && w <= 1.0)) {
      throw Error(ErrorCode::WeightSumError, where(at) + "mixture weight must lie in (0, 1]");
    }
    expect(":");
    return {w, term()};
  }

  Term term() {
    skip_space();
    if (peek_word("bernoulli")) {
      expect("bernoulli");
      expect("(");
      const auto at = pos_;
      skip_space();
      const double q = number();
      if (!(q >= 0.0 && q <= 1.0)) {
        throw Error(ErrorCode::ProbabilityOutOfRange,
                    where(at) + "probability out of range: " + std::to_string(q));
      }
      expect(")");
      expect("^");
      return BernoulliTerm{q, count()};
    }
    if (peek_word("det")) {
      expect("det");
      expect("(");
      std::string bits = lr_string();
      expect(")");
      return DetTerm{std::move(bits)};
    }
    if (peek_word("uniform")) {
      expect("uniform");
      expect("^");
      return UniformTerm{count()};
    }
    if (peek_word("explicit")) {
      expect("explicit");
      expect("{");
      ExplicitTerm t;
      do {
        std::string bits = lr_string();
        expect(":");
        t.pairs.emplace_back(std::move(bits), number());
      } while (accept(","));
      expect("}", "',' or '}'");
      return t;
    }
    fail("'bernoulli(', 'det(', 'uniform^' or 'explicit{'");
  }

  double number() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
            text_[pos_] == 'e' || text_[pos_] == 'E' ||
            ((text_[pos_] == '+' || text_[pos_] == '-') &&
             (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E')))) {
      ++pos_;
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (start == pos_ || ec != std::errc() || ptr != last) {
      pos_ = start;
      fail("number");
    }
    return value;
  }

  std::size_t count() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (start == pos_ || ec != std::errc() || value == 0) {
      pos_ = start;
      fail("positive integer");
    }
    return value;
  }

  std::string lr_string() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (text_[pos_] == 'L' || text_[pos_] == 'R')) ++pos_;
    if (start == pos_) fail("bit string over {L, R}");
    return std::string(text_.substr(start, pos_ - start));
  }

  void check(const DistSpec& spec) const {
    const std::size_t n = term_bits(spec.terms.front().term);
    double total = 0.0;
    for (const WeightedTerm& wt : spec.terms) {
      total += wt.weight;
      if (term_bits(wt.term) != n) {
        throw Error(ErrorCode::ArityMismatch, "mixture terms differ in number of boxes");
      }
      if (const auto* e = std::get_if<ExplicitTerm>(&wt.term)) {
        for (const auto& [bits, p] : e->pairs) {
          if (bits.size() != n) {
            throw Error(ErrorCode::ArityMismatch, "outcome " + bits + " has the wrong length");
          }
        }
      }
    }
    if (spec.is_mixture && !(std::abs(total - 1.0) <= 1e-9)) {
      throw Error(ErrorCode::WeightSumError, "mixture weights sum to " + std::to_string(total));
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_word(std::string_view word) {
    skip_space();
    return text_.substr(pos_, word.size()) == word;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token, std::string what = {}) {
    if (!accept(token)) fail(what.empty() ? "'" + std::string(token) + "'" : what);
  }

  std::pair<std::size_t, std::size_t> line_col(std::size_t at) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  std::string where(std::size_t at) const {
    auto [line, col] = line_col(at);
    return "line " + std::to_string(line) + ", column " + std::to_string(col) + ": ";
  }

  [[noreturn]] void fail(const std::string& expected) const {
    auto [line, col] = line_col(pos_);
    throw ParseError(line, col, expected);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Shortest text that reads back to the same double.
std::string format_number(double x) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string print_term(const Term& t) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BernoulliTerm>) {
          return "bernoulli(" + format_number(v.left_prob) + ")^" + std::to_string(v.n);
        } else if constexpr (std::is_same_v<T, DetTerm>) {
          return "det(" + v.bits + ")";
        } else if constexpr (std::is_same_v<T, UniformTerm>) {
          return "uniform^" + std::to_string(v.n);
        } else {
          std::string out = "explicit{";
          for (std::size_t i = 0; i < v.pairs.size(); ++i) {
            if (i > 0) out += ", ";
            out += v.pairs[i].first + ":" + format_number(v.pairs[i].second);
          }
          return out + "}";
        }
      },
      t);
}

// Left probability when the term is an i.i.d. product.
std::optional<double> product_left_prob(const Term& t) {
  if (const auto* b = std::get_if<BernoulliTerm>(&t)) return b->left_prob;
  if (std::holds_alternative<UniformTerm>(t)) return 0.5;
  if (const auto* d = std::get_if<DetTerm>(&t)) {
    if (d->bits.find('R') == std::string::npos) return 1.0;
    if (d->bits.find('L') == std::string::npos) return 0.0;
  }
  return std::nullopt;
}

ExplicitDistribution tabulate_term(const Term& t, std::uint64_t cap) {
  if (const auto* d = std::get_if<DetTerm>(&t)) return point_mass(Outcome::parse(d->bits));
  if (const auto* e = std::get_if<ExplicitTerm>(&t)) {
    std::vector<std::pair<Outcome, double>> entries;
    for (const auto& [bits, p] : e->pairs) entries.emplace_back(Outcome::parse(bits), p);
    return make_explicit(e->pairs.front().first.size(), entries, cap);
  }
  return explicit_of(iid(term_bits(t), *product_left_prob(t)), cap);
}

}  // namespace

std::size_t DistSpec::bits() const { return term_bits(terms.front().term); }

DistSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

std::string pretty_print(const DistSpec& spec) {
  if (!spec.is_mixture) return print_term(spec.terms.front().term);
  std::string out = "mix(";
  for (std::size_t i = 0; i < spec.terms.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_number(spec.terms[i].weight) + ": " + print_term(spec.terms[i].term);
  }
  return out + ")";
}

ResolvedDistribution resolve(const DistSpec& spec, std::uint64_t cap) {
  const std::size_t n = spec.bits();
  double total = 0.0;
  for (const WeightedTerm& wt : spec.terms) total += wt.weight;

  const bool structured = std::all_of(spec.terms.begin(), spec.terms.end(), [](const auto& wt) {
    return product_left_prob(wt.term).has_value();
  });
  if (structured) {
    std::vector<double> weights;
    std::vector<IidProduct> comps;
    for (const WeightedTerm& wt : spec.terms) {
      weights.push_back(wt.weight / total);
      comps.push_back({n, *product_left_prob(wt.term)});
    }
    return mixture(weights, comps);
  }

  std::map<std::uint64_t, double> acc;
  for (const WeightedTerm& wt : spec.terms) {
    const ExplicitDistribution part = tabulate_term(wt.term, cap);
    for (const Entry& e : part.support()) acc[e.index] += wt.weight / total * e.prob;
  }
  std::vector<Entry> entries;
  for (const auto& [index, p] : acc) entries.push_back({index, p});
  return ExplicitDistribution::from_entries(n, std::move(entries), cap);
}

ExplicitDistribution tabulate(const ResolvedDistribution& d, std::uint64_t cap) {
  if (const auto* e = std::get_if<ExplicitDistribution>(&d)) return *e;
  return explicit_of(std::get<MixtureOfProducts>(d), cap);
}

}  // namespace szilard
