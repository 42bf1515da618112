#include "szilard/commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>

#include <json.hpp>

#include "szilard/entropy.hpp"
#include "szilard/oracle.hpp"

namespace szilard {

using Json = nlohmann::ordered_json;

namespace {

Json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round_significant(x);
}

std::string csv_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

Json energy_json(const Energy& e) {
  return Json{{"bits", num(e.bits)}, {"joules", num(e.joules)}, {"eV", num(e.electron_volts)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Flat key,value CSV for the object-shaped commands.
std::string flat_csv(const Json& j) {
  std::string header;
  std::string row;
  auto emit = [&](const std::string& key, const Json& v) {
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += key;
    if (v.is_null()) return;
    if (v.is_number_float()) {
      row += csv_number(v.get<double>());
    } else if (v.is_string()) {
      row += csv_field(v.get<std::string>());
    } else {
      row += v.dump();
    }
  };
  for (const auto& [key, v] : j.items()) {
    if (v.is_object()) {
      for (const auto& [sub, w] : v.items()) emit(key + "_" + sub, w);
    } else if (!v.is_array()) {
      emit(key, v);
    }
  }
  return header + "\n" + row + "\n";
}

struct Evaluated {
  std::optional<TypeClassView> view;
  std::optional<ExplicitDistribution> table;
  std::size_t n = 0;
};

Evaluated evaluate(const DistSpec& spec) {
  Evaluated ev;
  const ResolvedDistribution d = resolve(spec);
  if (const auto* m = std::get_if<MixtureOfProducts>(&d)) {
    ev.view.emplace(*m);
    ev.n = m->bits();
  } else {
    ev.table = std::get<ExplicitDistribution>(d);
    ev.n = ev.table->bits();
  }
  return ev;
}

std::optional<double> single_product_left_prob(const DistSpec& spec) {
  if (spec.terms.size() != 1) return std::nullopt;
  const Term& t = spec.terms.front().term;
  if (const auto* b = std::get_if<BernoulliTerm>(&t)) return b->left_prob;
  if (std::holds_alternative<UniformTerm>(t)) return 0.5;
  return std::nullopt;
}

}  // namespace

double round_significant(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

std::string error_envelope(ErrorCode code, const std::string& message) {
  Json j{{"error", {{"code", std::string(to_string(code))}, {"message", message}}}};
  return j.dump() + "\n";
}

std::string cmd_entropy(const DistSpec& spec, double eps, OutputFormat format) {
  const Evaluated ev = evaluate(spec);
  const EntropyReport r = ev.view ? smooth_report(*ev.view, eps) : smooth_report(*ev.table, eps);
  Json j{{"spec", pretty_print(spec)},
         {"path", ev.view ? "type_class" : "explicit"},
         {"n", r.n},
         {"epsilon", num(r.epsilon)},
         {"shannon", num(r.shannon)},
         {"h_min", num(r.h_min)},
         {"h_max", num(r.h_max)},
         {"h_min_smooth", num(r.h_min_smooth)},
         {"h_max_smooth", num(r.h_max_smooth)}};
  return format == OutputFormat::Json ? dump(j) : flat_csv(j);
}

std::string cmd_work(const DistSpec& spec, double eps, double kelvin, OutputFormat format) {
  const Evaluated ev = evaluate(spec);
  const WorkUnit c = work_unit(kelvin);
  const RiskFreeWork thm1 = ev.view ? thm1_work(*ev.view, eps, c) : thm1_work(*ev.table, eps, c);
  std::optional<Energy> thm2;
  if (eps > 0.0) thm2 = ev.view ? thm2_bound(*ev.view, eps, c) : thm2_bound(*ev.table, eps, c);

  Json j{{"spec", pretty_print(spec)},
         {"n", ev.n},
         {"epsilon", num(eps)},
         {"temperature_kelvin", num(kelvin)},
         {"work_unit", {{"joules", num(c.joules)}, {"eV", num(c.electron_volts)}}},
         {"min_work", energy_json(thm1.real)},
         {"min_work_integral", energy_json(thm1.integral)},
         {"max_work", thm2 ? energy_json(*thm2) : Json(nullptr)}};

  if (auto q = single_product_left_prob(spec)) {
    j["shannon_limit"] = energy_json(shannon_limit_work(*q, ev.n, c));
  } else {
    j["shannon_limit"] = nullptr;
  }

  j["bennett"] = nullptr;
  if (ev.n <= kMaxExplicitBits && (std::uint64_t{1} << ev.n) <= kDefaultSupportCap) {
    const ExplicitDistribution table = ev.table ? *ev.table : explicit_of(*ev.view);
    try {
      const BitProfile profile = canonical_permutation(table).profile;
      j["bennett"] = energy_json(energy(bennett_work(profile, 1.0), c));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BiasedBitsPresent) throw;
    }
  }

  Json sensitivity = Json::array();
  for (double t : {290.0, 300.0}) {
    const WorkUnit ct = work_unit(t);
    sensitivity.push_back(
        {{"temperature_kelvin", num(t)},
         {"min_work_eV", num(energy(thm1.real.bits, ct).electron_volts)},
         {"max_work_eV", thm2 ? num(energy(thm2->bits, ct).electron_volts) : Json(nullptr)}});
  }
  j["temperature_sensitivity"] = sensitivity;
  return format == OutputFormat::Json ? dump(j) : flat_csv(j);
}

CommandOutput cmd_game(const DistSpec& spec, const GameOptions& options) {
  const Evaluated ev = evaluate(spec);
  const ExplicitDistribution p = ev.table ? *ev.table : explicit_of(*ev.view);
  const GameConfig& cfg = options.config;
  const WorkUnit c = work_unit(cfg.temperature_kelvin);
  const double eps = cfg.epsilon;
  check_epsilon(eps);

  Strategy s;
  if (options.strategy == "riskfree") {
    s = build_riskfree_strategy(p, eps);
  } else if (options.strategy == "gambler") {
    s = build_gambler_strategy(p, options.bets);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown strategy '" + options.strategy + "'");
  }

  const ExactResult exact = exact_evaluate(p, s, c);
  const MonteCarloEstimate mc = monte_carlo(p, s, cfg);
  const RiskFreeWork thm1 = thm1_work(p, eps, c);
  std::optional<Energy> thm2;
  if (eps > 0.0) thm2 = thm2_bound(p, eps, c);

  Json violations = Json::array();
  if (options.strategy == "riskfree" && exact.success_prob < 1.0 - eps - 1e-12) {
    violations.push_back("risk-free strategy succeeds with probability below 1 - epsilon");
  }
  if (eps > 0.0 && exact.success_prob > eps &&
      static_cast<double>(s.committed_boxes()) >=
          static_cast<double>(p.bits()) - h_min(p) + std::log2(1.0 / eps)) {
    violations.push_back("bet count reaches n - H_min + log2(1/epsilon) with success above epsilon");
  }

  Json bets = Json::array();
  for (const Bet& b : s.bets) bets.push_back({{"box", b.position}, {"guess", b.value ? "R" : "L"}});

  Json j{{"spec", pretty_print(spec)},
         {"n", p.bits()},
         {"epsilon", num(eps)},
         {"temperature_kelvin", num(cfg.temperature_kelvin)},
         {"strategy",
          {{"kind", options.strategy},
           {"bets", bets},
           {"committed_boxes", s.committed_boxes()},
           {"committed_work_joules", num(s.committed_work(c))}}},
         {"exact",
          {{"success_prob", num(exact.success_prob)},
           {"expected_work_joules", num(exact.expected_work_joules)}}},
         {"monte_carlo",
          {{"success_rate", num(mc.success_rate)},
           {"mean_work_joules", num(mc.mean_work_joules)},
           {"stderr", num(mc.standard_error)},
           {"successes", mc.successes},
           {"samples", mc.samples},
           {"seed", mc.seed}}},
         {"theorem_bounds",
          {{"min_work", energy_json(thm1.real)},
           {"min_work_integral", energy_json(thm1.integral)},
           {"max_work", thm2 ? energy_json(*thm2) : Json(nullptr)}}},
         {"violations", violations}};
  return {dump(j), violations.empty() ? 0 : 2};
}

std::string cmd_table1(double eps, double kelvin, std::size_t n) {
  const WorkUnit c = work_unit(kelvin);
  std::string out = "row,distribution,min_work_bits,max_work_bits,min_work_eV,max_work_eV\n";
  auto row = [&](int index, const std::string& label, const Energy& lo, const Energy& hi) {
    out += std::to_string(index) + "," + csv_field(label) + "," + csv_number(lo.bits) + "," +
           csv_number(hi.bits) + "," + csv_number(lo.electron_volts) + "," +
           csv_number(hi.electron_volts) + "\n";
  };
  const std::string ns = std::to_string(n);

  const Energy limit = shannon_limit_work(0.7, n, c);
  row(1, "bernoulli(0.7)^" + ns + " (n->inf limit)", limit, limit);

  const std::string specs[] = {
      "bernoulli(0.7)^" + ns,
      "mix(0.5: bernoulli(1)^" + ns + ", 0.5: bernoulli(0.5)^" + ns + ")",
      "mix(0.5: bernoulli(1)^" + ns + ", 0.5: bernoulli(0)^" + ns + ")",
  };
  int index = 2;
  for (const std::string& text : specs) {
    const TypeClassView view(std::get<MixtureOfProducts>(resolve(parse_spec(text))));
    const WorkBounds b = work_bounds(view, eps, c);
    row(index++, text, b.min_work, b.max_work);
  }
  return out;
}

std::string cmd_figure3(double p, double eps, std::span<const std::size_t> ns) {
  std::string out = "n,h_min_smooth,shannon,h_max_smooth,epsilon,p\n";
  for (std::size_t n : ns) {
    const TypeClassView view(iid(n, p));
    const EntropyReport r = smooth_report(view, eps);
    out += std::to_string(n) + "," + csv_number(r.h_min_smooth) + "," + csv_number(r.shannon) +
           "," + csv_number(r.h_max_smooth) + "," + csv_number(eps) + "," + csv_number(p) + "\n";
  }
  return out;
}

std::string cmd_oracle(const DistSpec& spec, double eps, double kelvin) {
  const Evaluated ev = evaluate(spec);
  const ExplicitDistribution p = ev.table ? *ev.table : explicit_of(*ev.view);
  const WorkUnit c = work_unit(kelvin);
  Json j{{"spec", pretty_print(spec)},
         {"epsilon", num(eps)},
         {"brute_hmax_smooth", num(oracle::brute_hmax_smooth(p, eps))},
         {"brute_hmin_smooth", num(oracle::brute_hmin_smooth(p, eps))}};
  if (p.bits() <= 3) {
    const auto best = oracle::exhaustive_strategy_search(p, eps, c);
    j["best_strategy"] = {{"boxes", best.boxes},
                          {"work_joules", num(best.work_joules)},
                          {"success_prob", num(best.success_prob)}};
  } else {
    j["best_strategy"] = nullptr;
  }
  return dump(j);
}

}  // namespace szilard
