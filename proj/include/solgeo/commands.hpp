#pragma once

// Run configuration and report generation behind the solgeo subcommands.
// Configuration, naming and gating problems surface as solgeo::Error; a
// completed run reports exit code 0 (all targets met) or 1 (some missed).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "solgeo/chart.hpp"

namespace solgeo::cli {

inline constexpr std::string_view kVersion = "1.0.0";

enum class Command { Catalog, Curvature, Verify, Converge, Scan };
enum class Format { Csv, Json };

Command parse_command(std::string_view name);
std::string_view command_name(Command c);

inline constexpr double kResidualTolerance = 1e-8;
inline constexpr double kAlgebraicTolerance = 1e-10;
inline constexpr double kFrameTolerance = 1e-12;
inline constexpr double kOrderMin = 1.5;
inline constexpr double kOrderMax = 2.5;

/// JSON schema (all keys optional, unknown keys rejected):
///   surface      string, catalog name (default "graph")
///   params       object with any of c, eps, R, r, rho
///   resolutions  array of ints >= 8, strictly increasing
///   ids          array of identity tags
///   tolerance    positive number; replaces every residual tolerance
///   order_min, order_max   accepted convergence-order window
///   format       "csv" or "json"
///   seed         unsigned integer for random frames
struct RunConfig {
  std::string surface = "graph";
  catalog::SurfaceParams params;
  std::optional<std::vector<int>> resolutions;
  std::vector<std::string> ids;
  std::optional<double> tolerance;
  double order_min = kOrderMin;
  double order_max = kOrderMax;
  std::optional<Format> format;
  std::uint64_t seed = 0x5eed5017ULL;
};

/// Throws InvalidArgument on malformed JSON, wrong types or unknown keys.
RunConfig parse_config(std::string_view json_text);

struct CommandOutput {
  int exit_code = 0;
  std::string report;   ///< CSV or JSON document, LF line endings
  std::string summary;  ///< one line for the terminal
};

CommandOutput run(Command command, const RunConfig& config);

/// %.17g; "nan", "inf", "-inf" for non-finite values.
std::string format_real(double v);

}  // namespace solgeo::cli
