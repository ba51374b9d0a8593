// Copyright 2026 The Tribraid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tribraid/analysis.hpp"

namespace tribraid::cli {

enum class OutputFormat { csv, json };

/// Uniform samples from..to inclusive. samples == 1 yields `from` alone.
struct ScanSpec {
  std::string parameter;
  double from = 0.0;
  double to = 0.0;
  int samples = 1;

  std::vector<double> values() const;
};

/// Square (theta, alpha) grid used by the spectrum and gauge scenarios.
struct GridSpec {
  double theta_from = kPi / 6;
  double theta_to = 5 * kPi / 6;
  double alpha_from = kPi / 6;
  double alpha_to = 5 * kPi / 6;
  int samples = 9;
};

struct ScenarioConfig {
  std::string scenario = "evolve";
  ControlParams controls = ControlParams::base_point();
  /// Amplitudes in `initial_basis`.
  std::array<Complex, 4> initial_state{};
  std::string initial_basis = "dressed";
  std::vector<PulseEvent> pulses;
  /// Defaults to the end of the last pulse.
  std::optional<double> total_time;
  ScanSpec scan;
  GridSpec grid;
  std::optional<double> eta;
  std::optional<double> omega_g;
  std::vector<std::string> words;
  /// Phase given to every letter of the breakprobe words.
  double word_phase = kPi / 2;
  /// etascan: letters that follow the scanned phase, and how much the second
  /// pulse overlaps the first.
  std::vector<bool> phase_mask;
  double overlap = 0.0;
  /// Background windows around etascan schedules.
  double lead = 0.0;
  double tail = 0.0;
  /// manybody coupling scale; T = pi / omega_i.
  double omega_i = 1.0;
  int trajectory_samples = 200;
  double tie_tolerance = kTieTolerance;
  std::string output_path = "-";
  OutputFormat format = OutputFormat::csv;
};

inline const std::vector<std::string> kScenarioNames = {
    "spectrum", "evolve", "kscan", "phasescan", "etascan",
    "breakprobe", "qutrit", "manybody", "gauge"};
inline const std::vector<std::string> kPresetNames = {"fig2a", "fig2b", "fig3a",
                                                      "fig4d", "fig6"};

/// Built-in configuration for a scenario or preset name. Throws
/// ValidationError listing the valid names otherwise.
ScenarioConfig default_config(const std::string& name);

/// YAML text layered on top of `base`. Throws ParseError (with line) on
/// malformed text and ValidationError (with field path) on bad values.
ScenarioConfig parse_config(const std::string& text, const ScenarioConfig& base);

/// As above with base = default_config(scenario key of the text).
ScenarioConfig parse_config(const std::string& text);

/// Re-checks every field; throws ValidationError with the field path.
void validate_config(const ScenarioConfig& cfg);

using Cell = std::variant<double, std::string>;

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Throws InvalidArgument when the row width differs from the header.
  void add_row(std::vector<Cell> row);
};

/// Module errors come back as the original code with the failing operation
/// prepended to the message.
ResultTable run_scenario(const ScenarioConfig& cfg);

std::string format_number(double x);
std::string render(const ResultTable& table, OutputFormat format);

/// "-" writes to stdout. Throws IoError.
void write_output(const ResultTable& table, OutputFormat format,
                  const std::string& path);

/// 0 success, 2 config, 3 computation, 4 I/O.
int exit_code_for(ErrorCode code);

}  // namespace tribraid::cli
