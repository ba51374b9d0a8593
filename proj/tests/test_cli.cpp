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

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tribraid/cli.hpp"

using namespace tribraid;
using namespace tribraid::cli;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

double number(const Cell& c) { return std::get<double>(c); }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "tribraid_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_tool(const std::string& args) {
  const std::string cmd = std::string(TRIBRAID_TOOL) + " " + args + " > " +
                          scratch("stdout.txt").string() + " 2> " +
                          scratch("stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("minimal evolve config gets defaults") {
  const ScenarioConfig cfg = parse_config(
      "scenario: evolve\n"
      "pulses:\n"
      "  - {pair: \"12\", orientation: over, phase: pi/2, start: 0}\n"
      "  - {pair: [2, 3], orientation: u, phase: 1.5707963267948966, start: pi}\n");
  REQUIRE(cfg.pulses.size() == 2);
  CHECK(cfg.pulses[0].rabi == 1.0);
  CHECK(cfg.pulses[0].duration == doctest::Approx(kPi));
  CHECK(cfg.pulses[1].start == doctest::Approx(kPi));
  CHECK(cfg.pulses[1].letter.orientation() == Orientation::under);
  CHECK(cfg.controls.theta == doctest::Approx(kPi / 2));
  CHECK(cfg.controls.phi == 0.0);
  CHECK(cfg.initial_state[0].real() == doctest::Approx(std::sqrt(0.4)));
}

TEST_CASE("config errors name the field") {
  const std::string bad_duration =
      "scenario: evolve\npulses:\n  - {pair: \"12\", duration: -1}\n";
  CHECK(code_of([&] { parse_config(bad_duration); }) == ErrorCode::ValidationError);
  CHECK(message_of([&] { parse_config(bad_duration); }).find("pulses[0].duration") != std::string::npos);

  const std::string unknown = "scenario: warp\n";
  CHECK(code_of([&] { parse_config(unknown); }) == ErrorCode::ValidationError);
  CHECK(message_of([&] { parse_config(unknown); }).find("kscan") != std::string::npos);

  CHECK(code_of([] { default_config("nope"); }) == ErrorCode::ValidationError);

  const std::string typo = "scenario: evolve\ncontrols: {thetaa: 1}\n";
  CHECK(message_of([&] { parse_config(typo); }).find("controls.thetaa") != std::string::npos);

  const std::string malformed = "scenario: evolve\npulses: [\n";
  CHECK(code_of([&] { parse_config(malformed); }) == ErrorCode::ParseError);
  CHECK(message_of([&] { parse_config(malformed); }).find("line") != std::string::npos);

  CHECK(code_of([] { parse_config("scenario: kscan\nscan: {parameter: phi}\n"); }) ==
        ErrorCode::ValidationError);
  CHECK(code_of([] { parse_config("scenario: etascan\neta: 2\n"); }) ==
        ErrorCode::ValidationError);
  CHECK(code_of([] { parse_config("scenario: breakprobe\nwords: [\"13o\"]\n"); }) ==
        ErrorCode::ValidationError);
  CHECK(code_of([] { parse_config("scenario: evolve\ncontrols: {alpha: 0}\n"); }) ==
        ErrorCode::ValidationError);
  CHECK(code_of([] { parse_config("scenario: evolve\ninitial_state: [1, 1, 0, 0]\n"); }) ==
        ErrorCode::ValidationError);
}

TEST_CASE("evolve presets end in the expected dressed populations") {
  const double a[4] = {0.3, 0.2, 0.4, 0.1};
  const double b[4] = {0.2, 0.4, 0.3, 0.1};
  const auto ta = run_scenario(default_config("fig2a"));
  const auto tb = run_scenario(default_config("fig2b"));
  CHECK(ta.columns == std::vector<std::string>{"t", "P1", "P2", "P3", "P4"});
  CHECK(ta.rows.size() == 200);
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(number(ta.rows.back()[i + 1]) - a[i]) <= 1e-9);
    CHECK(std::abs(number(tb.rows.back()[i + 1]) - b[i]) <= 1e-9);
  }
}

TEST_CASE("kscan preset plateaus") {
  const auto t = run_scenario(default_config("fig3a"));
  CHECK(t.columns == std::vector<std::string>{"dt", "K"});
  CHECK(t.rows.size() == 201);
  for (const auto& row : t.rows) {
    const double dt = number(row[0]);
    if (dt > kPi) CHECK(number(row[1]) == 54.0);
    if (dt < -kPi) CHECK(number(row[1]) == 72.0);
  }
}

TEST_CASE("spectrum rows are degenerate") {
  const auto t = run_scenario(default_config("spectrum"));
  CHECK(t.rows.size() == 81);
  for (const auto& row : t.rows) {
    CHECK(number(row[4]) - number(row[3]) <= 1e-10);
    CHECK(number(row[5]) - number(row[4]) <= 1e-10);
  }
}

TEST_CASE("scenario column layouts") {
  CHECK(run_scenario(default_config("fig4d")).columns ==
        std::vector<std::string>{"phi", "reF_w1", "reF_w2", "reF_w3", "reF_w4", "imF_w1",
                                 "imF_w2", "imF_w3", "imF_w4"});
  CHECK(run_scenario(default_config("etascan")).columns ==
        std::vector<std::string>{"phi", "P1", "P2", "P3", "P4"});
  const auto brk = run_scenario(default_config("fig6"));
  CHECK(brk.columns == std::vector<std::string>{"word", "P1", "P2", "P3", "P4"});
  CHECK(std::get<std::string>(brk.rows[0][0]) == "12o-23u-12u");
  CHECK(run_scenario(default_config("gauge")).columns ==
        std::vector<std::string>{"theta", "alpha", "reF23_12", "imF23_12"});
  CHECK(run_scenario(default_config("qutrit")).rows.size() == 4);
  CHECK(run_scenario(default_config("manybody")).rows.size() == 4);
}

TEST_CASE("computation errors carry the failing operation") {
  ScenarioConfig cfg = default_config("evolve");
  cfg.pulses[0].duration = -1.0;
  CHECK(code_of([&] { run_scenario(cfg); }) == ErrorCode::ValidationError);

  cfg = default_config("gauge");
  cfg.grid.theta_from = 1e-7;
  const std::string msg = message_of([&] { run_scenario(cfg); });
  CHECK(msg.find("gauge_field") != std::string::npos);
  CHECK(exit_code_for(ErrorCode::StepTooLarge) == 3);
  CHECK(exit_code_for(ErrorCode::ValidationError) == 2);
  CHECK(exit_code_for(ErrorCode::IoError) == 4);
}

TEST_CASE("render formats") {
  ResultTable t{{"a", "b"}, {}};
  CHECK(render(t, OutputFormat::csv) == "a,b\n");
  t.add_row({1.0, -0.0});
  CHECK(render(t, OutputFormat::csv) == "a,b\n1.00000000000e+00,0.00000000000e+00\n");
  CHECK(render(t, OutputFormat::json) ==
        "{\n  \"columns\": [\"a\", \"b\"],\n  \"rows\": [\n    [1.00000000000e+00, "
        "0.00000000000e+00]\n  ]\n}\n");
  ResultTable s{{"word"}, {}};
  s.add_row({std::string("x,\"y\"")});
  CHECK(render(s, OutputFormat::csv) == "word\n\"x,\"\"y\"\"\"\n");
  CHECK(code_of([&] { t.add_row({1.0}); }) == ErrorCode::InvalidArgument);
  CHECK(format_number(0.1234567890123456) == "1.23456789012e-01");
}

TEST_CASE("write_output is byte-stable") {
  const auto t = run_scenario(default_config("fig4d"));
  const auto p1 = scratch("a.csv"), p2 = scratch("b.csv");
  write_output(t, OutputFormat::csv, p1.string());
  write_output(run_scenario(default_config("fig4d")), OutputFormat::csv, p2.string());
  const std::string a = slurp(p1);
  CHECK(a == slurp(p2));
  CHECK(a.find('\r') == std::string::npos);
  CHECK(a.find(",\n") == std::string::npos);
  CHECK(code_of([&] { write_output(t, OutputFormat::csv, "/nonexistent/dir/x.csv"); }) ==
        ErrorCode::IoError);
}

TEST_CASE("tool exit codes") {
  const auto out = scratch("tool.csv");
  CHECK(run_tool("fig2a --out " + out.string()) == 0);
  CHECK(slurp(out).rfind("t,P1,P2,P3,P4\n", 0) == 0);
  CHECK(run_tool("fig2a --format json --out " + out.string()) == 0);
  CHECK(slurp(out).rfind("{", 0) == 0);
  CHECK(run_tool("nonsense") == 2);
  CHECK(run_tool("fig2a --format xml") == 2);

  const auto cfg = scratch("bad.yaml");
  std::ofstream(cfg) << "scenario: evolve\npulses:\n  - {pair: \"12\", rabi: 0}\n";
  CHECK(run_tool("evolve --config " + cfg.string()) == 2);
  CHECK(slurp(scratch("stderr.txt")).find("pulses[0].rabi") != std::string::npos);

  std::ofstream(cfg) << "grid: {theta_from: 1.0e-7}\n";
  CHECK(run_tool("gauge --config " + cfg.string()) == 3);

  CHECK(run_tool("qutrit --out /nonexistent/dir/x.csv") == 4);

  std::ofstream(cfg) << "scenario: kscan\nscan: {samples: 5}\n";
  CHECK(run_tool("kscan --config " + cfg.string() + " --tol 1e-5 --out " + out.string()) == 0);
  CHECK(slurp(out).find("7.20000000000e+01") != std::string::npos);
}
