#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "szilard/distspec.hpp"
#include "szilard/error.hpp"
#include "szilard/game.hpp"

namespace szilard {

enum class OutputFormat { Json, Csv };

struct CommandOutput {
  std::string text;
  int exit_code = 0;
};

struct GameOptions {
  std::string strategy = "riskfree";  // or "gambler"
  std::size_t bets = 0;               // gambler bet size
  GameConfig config;
};

std::string cmd_entropy(const DistSpec& spec, double eps, OutputFormat format = OutputFormat::Json);
std::string cmd_work(const DistSpec& spec, double eps, double kelvin,
                     OutputFormat format = OutputFormat::Json);
/// Exit code 2 when a theorem check fails on this instance.
CommandOutput cmd_game(const DistSpec& spec, const GameOptions& options);
std::string cmd_table1(double eps, double kelvin, std::size_t n);
std::string cmd_figure3(double p, double eps, std::span<const std::size_t> ns);
std::string cmd_oracle(const DistSpec& spec, double eps, double kelvin);

/// {"error": {"code": ..., "message": ...}}
std::string error_envelope(ErrorCode code, const std::string& message);

/// Rounds to `digits` significant decimal digits.
double round_significant(double x, int digits = 6);

}  // namespace szilard
