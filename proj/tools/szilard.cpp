// Command-line front end: entropies, work values and the extraction game for
// distributions over n Szilard boxes.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "szilard/commands.hpp"

namespace {

struct SpecInput {
  std::string text;
  std::string file;

  szilard::DistSpec load() const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw szilard::Error(szilard::ErrorCode::InvalidArgument, "cannot read " + file);
      std::stringstream buf;
      buf << in.rdbuf();
      return szilard::parse_spec(buf.str());
    }
    if (text.empty()) {
      throw szilard::Error(szilard::ErrorCode::InvalidArgument, "--spec or --spec-file required");
    }
    return szilard::parse_spec(text);
  }
};

void add_spec(CLI::App* cmd, SpecInput& spec) {
  auto* opt_text = cmd->add_option("--spec", spec.text, "distribution, e.g. bernoulli(0.7)^1000");
  auto* opt_file = cmd->add_option("--spec-file", spec.file, "file holding the distribution");
  opt_text->excludes(opt_file);
}

szilard::OutputFormat to_format(const std::string& f) {
  return f == "csv" ? szilard::OutputFormat::Csv : szilard::OutputFormat::Json;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smooth entropies and the work value of information"};
  app.require_subcommand(1);

  SpecInput spec;
  double eps = 1e-3;
  double kelvin = 300.0;
  std::string format = "json";
  auto common = [&](CLI::App* cmd) {
    add_spec(cmd, spec);
    cmd->add_option("--epsilon", eps, "smoothing parameter")->capture_default_str();
    cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  };

  auto* entropy = app.add_subcommand("entropy", "entropy report for a distribution");
  common(entropy);

  auto* work = app.add_subcommand("work", "risk-free and risk-tolerant work values");
  common(work);
  work->add_option("--temperature-kelvin", kelvin)->capture_default_str();

  szilard::GameOptions game_opts;
  auto* game = app.add_subcommand("game", "play the extraction game, exactly and by sampling");
  common(game);
  game->add_option("--temperature-kelvin", kelvin)->capture_default_str();
  game->add_option("--seed", game_opts.config.seed)->capture_default_str();
  game->add_option("--samples", game_opts.config.samples)->capture_default_str();
  game->add_option("--workers", game_opts.config.workers)->capture_default_str();
  game->add_option("--strategy", game_opts.strategy)
      ->check(CLI::IsMember({"riskfree", "gambler"}))
      ->capture_default_str();
  game->add_option("--bets", game_opts.bets, "bet size for the gambler strategy");

  double table_eps = 1e-5;
  std::size_t table_n = 1000;
  auto* table1 = app.add_subcommand("table1", "work values of the four example distributions (CSV)");
  table1->add_option("--epsilon", table_eps)->capture_default_str();
  table1->add_option("--temperature-kelvin", kelvin)->capture_default_str();
  table1->add_option("--n", table_n)->capture_default_str();

  double fig_p = 0.7;
  std::vector<std::size_t> fig_ns{100, 200, 400, 800, 1600};
  auto* figure3 = app.add_subcommand("figure3", "smooth entropies of Bernoulli(p)^n versus n (CSV)");
  figure3->add_option("--epsilon", eps)->capture_default_str();
  figure3->add_option("--p", fig_p, "probability of L")->capture_default_str();
  figure3->add_option("--n-list", fig_ns)->delimiter(',')->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "");
  oracle->group("");
  add_spec(oracle, spec);
  oracle->add_option("--epsilon", eps);
  oracle->add_option("--temperature-kelvin", kelvin);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << szilard::error_envelope(szilard::ErrorCode::InvalidArgument, e.what());
    return 1;
  }

  try {
    if (entropy->parsed()) {
      std::cout << szilard::cmd_entropy(spec.load(), eps, to_format(format));
    } else if (work->parsed()) {
      std::cout << szilard::cmd_work(spec.load(), eps, kelvin, to_format(format));
    } else if (game->parsed()) {
      game_opts.config.epsilon = eps;
      game_opts.config.temperature_kelvin = kelvin;
      const auto out = szilard::cmd_game(spec.load(), game_opts);
      std::cout << out.text;
      return out.exit_code;
    } else if (table1->parsed()) {
      std::cout << szilard::cmd_table1(table_eps, kelvin, table_n);
    } else if (figure3->parsed()) {
      std::cout << szilard::cmd_figure3(fig_p, eps, fig_ns);
    } else if (oracle->parsed()) {
      std::cout << szilard::cmd_oracle(spec.load(), eps, kelvin);
    }
  } catch (const szilard::Error& e) {
    std::cerr << szilard::error_envelope(e.code(), e.what());
    return e.code() == szilard::ErrorCode::InvariantViolation ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << szilard::error_envelope(szilard::ErrorCode::InvariantViolation, e.what());
    return 2;
  }
  return 0;
}
