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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tribraid/cli.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw tribraid::Error(tribraid::ErrorCode::ParseError,
                          "cannot read config '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace tribraid;

  CLI::App app{"Braiding in a degenerate four-level system: scenario runner"};
  std::string name;
  std::string config_path;
  std::string out_path;
  std::string format;
  double tol = 0.0;
  app.add_option("scenario", name, "Scenario or preset name")->required();
  app.add_option("--config", config_path, "YAML configuration layered on the defaults");
  app.add_option("--out", out_path, "Output path, '-' for stdout");
  app.add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  auto* tol_opt = app.add_option("--tol", tol, "Population tie tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cli::ScenarioConfig cfg;
  try {
    cfg = cli::default_config(name);
    if (!config_path.empty()) cfg = cli::parse_config(read_file(config_path), cfg);
    if (!out_path.empty()) cfg.output_path = out_path;
    if (format == "csv") cfg.format = cli::OutputFormat::csv;
    if (format == "json") cfg.format = cli::OutputFormat::json;
    if (*tol_opt) cfg.tie_tolerance = tol;
    cli::validate_config(cfg);
  } catch (const Error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return cli::exit_code_for(e.code()) == 3 ? 2 : cli::exit_code_for(e.code());
  }

  cli::ResultTable table;
  try {
    table = cli::run_scenario(cfg);
  } catch (const Error& e) {
    std::cerr << "computation failed in " << cfg.scenario << ": " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "computation failed in " << cfg.scenario << ": " << e.what() << '\n';
    return 3;
  }

  try {
    cli::write_output(table, cfg.format, cfg.output_path);
  } catch (const Error& e) {
    std::cerr << "output error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
