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

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <cctype>
#include <cstdlib>
#include <regex>
#include <set>

#include "tribraid/cli.hpp"

namespace tribraid::cli {

namespace {

[[noreturn]] void invalid(const std::string& path, const std::string& why) {
  throw Error(ErrorCode::ValidationError, path + ": " + why);
}

std::string at_line(const YAML::Node& node) {
  const auto mark = node.Mark();
  return mark.line >= 0 ? " (line " + std::to_string(mark.line + 1) + ")" : "";
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

// Plain numbers or multiples of pi: "pi", "-pi/2", "2*pi", "5pi/6", "0.5 pi".
double read_real(const YAML::Node& node, const std::string& path) {
  if (!node.IsScalar()) invalid(path + at_line(node), "expected a number");
  const std::string text = node.Scalar();
  char* end = nullptr;
  const double plain = std::strtod(text.c_str(), &end);
  if (!text.empty() && end == text.c_str() + text.size()) {
    if (!std::isfinite(plain)) invalid(path + at_line(node), "must be finite");
    return plain;
  }
  static const std::regex angle(
      R"(^\s*([+-]?)\s*(\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(\d+\.?\d*))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, angle)) {
    const double coeff = m[2].length() > 0 ? std::stod(m[2].str()) : 1.0;
    const double den = m[3].matched ? std::stod(m[3].str()) : 1.0;
    if (den == 0.0) invalid(path + at_line(node), "division by zero in '" + text + "'");
    return (m[1].str() == "-" ? -1.0 : 1.0) * coeff * kPi / den;
  }
  invalid(path + at_line(node), "cannot read '" + text + "' as a number");
}

int read_int(const YAML::Node& node, const std::string& path) {
  const double v = read_real(node, path);
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    invalid(path + at_line(node), "expected an integer");
  }
  return static_cast<int>(v);
}

std::string read_string(const YAML::Node& node, const std::string& path) {
  if (!node.IsScalar()) invalid(path + at_line(node), "expected a string");
  return node.Scalar();
}

bool read_bool(const YAML::Node& node, const std::string& path) {
  const std::string s = read_string(node, path);
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  invalid(path + at_line(node), "expected true or false");
}

void reject_unknown(const YAML::Node& map, const std::string& path,
                    const std::set<std::string>& known) {
  if (!map.IsMap()) invalid(path + at_line(map), "expected a mapping");
  for (const auto& kv : map) {
    const std::string key = kv.first.Scalar();
    if (!known.count(key)) {
      invalid((path.empty() ? key : path + "." + key) + at_line(kv.first),
              "unknown key");
    }
  }
}

Complex read_complex(const YAML::Node& node, const std::string& path) {
  if (node.IsSequence()) {
    if (node.size() != 2) invalid(path + at_line(node), "expected [re, im]");
    return {read_real(node[0], path + "[0]"), read_real(node[1], path + "[1]")};
  }
  return {read_real(node, path), 0.0};
}

Orientation read_orientation(const YAML::Node& node, const std::string& path) {
  const std::string s = read_string(node, path);
  if (s == "over" || s == "o") return Orientation::over;
  if (s == "under" || s == "u") return Orientation::under;
  invalid(path + at_line(node), "expected over or under, got '" + s + "'");
}

std::pair<int, int> read_pair(const YAML::Node& node, const std::string& path) {
  if (node.IsSequence()) {
    if (node.size() != 2) invalid(path + at_line(node), "expected [k, j]");
    return {read_int(node[0], path + "[0]"), read_int(node[1], path + "[1]")};
  }
  const std::string s = read_string(node, path);
  if (s.size() != 2 || !std::isdigit(static_cast<unsigned char>(s[0])) ||
      !std::isdigit(static_cast<unsigned char>(s[1]))) {
    invalid(path + at_line(node), "expected a pair like \"12\"");
  }
  return {s[0] - '0', s[1] - '0'};
}

PulseEvent read_pulse(const YAML::Node& node, const std::string& path) {
  reject_unknown(node, path,
                 {"pair", "orientation", "phase", "start", "duration", "rabi"});
  if (!node["pair"]) invalid(path + ".pair" + at_line(node), "required");
  const auto [k, j] = read_pair(node["pair"], path + ".pair");
  const Orientation o = node["orientation"]
                            ? read_orientation(node["orientation"], path + ".orientation")
                            : Orientation::over;
  const double phase = node["phase"] ? read_real(node["phase"], path + ".phase") : 0.0;
  std::optional<BraidLetter> letter;
  try {
    letter.emplace(k, j, o, phase);
  } catch (const Error& e) {
    invalid(path + ".pair" + at_line(node["pair"]), e.detail());
  }
  PulseEvent p{*letter};
  if (node["start"]) p.start = read_real(node["start"], path + ".start");
  if (node["duration"]) p.duration = read_real(node["duration"], path + ".duration");
  if (node["rabi"]) p.rabi = read_real(node["rabi"], path + ".rabi");
  return p;
}

void layer(const YAML::Node& root, ScenarioConfig& cfg) {
  reject_unknown(root, "",
                 {"scenario", "controls", "initial_state", "initial_basis", "pulses",
                  "total_time", "scan", "grid", "eta", "omega_g", "words",
                  "word_phase", "phase_mask", "overlap", "lead", "tail", "omega_i",
                  "trajectory_samples", "tie_tolerance", "output"});

  if (const auto c = root["controls"]) {
    reject_unknown(c, "controls", {"theta", "alpha", "phi", "omega0"});
    if (c["theta"]) cfg.controls.theta = read_real(c["theta"], "controls.theta");
    if (c["alpha"]) cfg.controls.alpha = read_real(c["alpha"], "controls.alpha");
    if (c["phi"]) cfg.controls.phi = read_real(c["phi"], "controls.phi");
    if (c["omega0"]) cfg.controls.omega0 = read_real(c["omega0"], "controls.omega0");
  }
  if (const auto s = root["initial_state"]) {
    if (!s.IsSequence() || s.size() != 4) {
      invalid("initial_state" + at_line(s), "expected 4 amplitudes");
    }
    for (std::size_t i = 0; i < 4; ++i) {
      cfg.initial_state[i] =
          read_complex(s[i], "initial_state[" + std::to_string(i) + "]");
    }
  }
  if (root["initial_basis"]) {
    cfg.initial_basis = read_string(root["initial_basis"], "initial_basis");
  }
  if (const auto ps = root["pulses"]) {
    if (!ps.IsSequence()) invalid("pulses" + at_line(ps), "expected a list");
    cfg.pulses.clear();
    for (std::size_t i = 0; i < ps.size(); ++i) {
      cfg.pulses.push_back(read_pulse(ps[i], "pulses[" + std::to_string(i) + "]"));
    }
  }
  if (root["total_time"]) cfg.total_time = read_real(root["total_time"], "total_time");
  if (const auto s = root["scan"]) {
    reject_unknown(s, "scan", {"parameter", "from", "to", "samples"});
    if (s["parameter"]) cfg.scan.parameter = read_string(s["parameter"], "scan.parameter");
    if (s["from"]) cfg.scan.from = read_real(s["from"], "scan.from");
    if (s["to"]) cfg.scan.to = read_real(s["to"], "scan.to");
    if (s["samples"]) cfg.scan.samples = read_int(s["samples"], "scan.samples");
  }
  if (const auto g = root["grid"]) {
    reject_unknown(g, "grid",
                   {"theta_from", "theta_to", "alpha_from", "alpha_to", "samples"});
    if (g["theta_from"]) cfg.grid.theta_from = read_real(g["theta_from"], "grid.theta_from");
    if (g["theta_to"]) cfg.grid.theta_to = read_real(g["theta_to"], "grid.theta_to");
    if (g["alpha_from"]) cfg.grid.alpha_from = read_real(g["alpha_from"], "grid.alpha_from");
    if (g["alpha_to"]) cfg.grid.alpha_to = read_real(g["alpha_to"], "grid.alpha_to");
    if (g["samples"]) cfg.grid.samples = read_int(g["samples"], "grid.samples");
  }
  if (root["eta"]) cfg.eta = read_real(root["eta"], "eta");
  if (root["omega_g"]) cfg.omega_g = read_real(root["omega_g"], "omega_g");
  if (const auto w = root["words"]) {
    if (!w.IsSequence()) invalid("words" + at_line(w), "expected a list");
    cfg.words.clear();
    for (std::size_t i = 0; i < w.size(); ++i) {
      cfg.words.push_back(read_string(w[i], "words[" + std::to_string(i) + "]"));
    }
  }
  if (root["word_phase"]) cfg.word_phase = read_real(root["word_phase"], "word_phase");
  if (const auto m = root["phase_mask"]) {
    if (!m.IsSequence()) invalid("phase_mask" + at_line(m), "expected a list");
    cfg.phase_mask.clear();
    for (std::size_t i = 0; i < m.size(); ++i) {
      cfg.phase_mask.push_back(read_bool(m[i], "phase_mask[" + std::to_string(i) + "]"));
    }
  }
  if (root["overlap"]) cfg.overlap = read_real(root["overlap"], "overlap");
  if (root["lead"]) cfg.lead = read_real(root["lead"], "lead");
  if (root["tail"]) cfg.tail = read_real(root["tail"], "tail");
  if (root["omega_i"]) cfg.omega_i = read_real(root["omega_i"], "omega_i");
  if (root["trajectory_samples"]) {
    cfg.trajectory_samples = read_int(root["trajectory_samples"], "trajectory_samples");
  }
  if (root["tie_tolerance"]) {
    cfg.tie_tolerance = read_real(root["tie_tolerance"], "tie_tolerance");
  }
  if (const auto o = root["output"]) {
    reject_unknown(o, "output", {"path", "format"});
    if (o["path"]) cfg.output_path = read_string(o["path"], "output.path");
    if (o["format"]) {
      const std::string f = read_string(o["format"], "output.format");
      if (f == "csv") {
        cfg.format = OutputFormat::csv;
      } else if (f == "json") {
        cfg.format = OutputFormat::json;
      } else {
        invalid("output.format" + at_line(o["format"]), "expected csv or json");
      }
    }
  }
}

YAML::Node load(const std::string& text) {
  try {
    YAML::Node root = YAML::Load(text);
    if (root.IsNull()) return YAML::Node(YAML::NodeType::Map);
    return root;
  } catch (const YAML::Exception& e) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(e.mark.line + 1) +
                                           ", column " +
                                           std::to_string(e.mark.column + 1) +
                                           ": " + e.msg);
  }
}

std::array<Complex, 4> psi0_amplitudes() {
  return {std::sqrt(0.4), std::sqrt(0.3), std::sqrt(0.2), std::sqrt(0.1)};
}

PulseEvent pulse(int k, int j, Orientation o, double start) {
  return PulseEvent{BraidLetter(k, j, o, kPi / 2), start, kDefaultPulseTime,
                    kDefaultRabi};
}

ScanSpec phase_grid() { return {"phi", 0.0, 2 * kPi * 63.0 / 64.0, 64}; }

}  // namespace

std::vector<double> ScanSpec::values() const {
  std::vector<double> out;
  if (samples == 1) return {from};
  for (int i = 0; i < samples; ++i) {
    out.push_back(from + (to - from) * static_cast<double>(i) / (samples - 1));
  }
  return out;
}

ScenarioConfig default_config(const std::string& name) {
  ScenarioConfig cfg;
  cfg.initial_state = psi0_amplitudes();
  if (name == "evolve" || name == "fig2a") {
    cfg.scenario = "evolve";
    cfg.pulses = {pulse(1, 2, Orientation::over, 0.0),
                  pulse(2, 3, Orientation::under, kPi)};
  } else if (name == "fig2b") {
    cfg.scenario = "evolve";
    cfg.pulses = {pulse(2, 3, Orientation::under, 0.0),
                  pulse(1, 2, Orientation::over, kPi)};
  } else if (name == "kscan" || name == "fig3a") {
    cfg.scenario = "kscan";
    cfg.pulses = {pulse(1, 2, Orientation::over, 0.0),
                  pulse(2, 3, Orientation::under, 0.0)};
    cfg.scan = {"dt", -2 * kPi, 2 * kPi, 201};
  } else if (name == "phasescan" || name == "fig4d") {
    cfg.scenario = "phasescan";
    cfg.words = {"12o 23u 12o", "12o 23o 12u", "12o 23u 12u", "12o 23o 12o"};
    cfg.scan = phase_grid();
  } else if (name == "etascan") {
    cfg.scenario = "etascan";
    cfg.words = {"12o 23u"};
    cfg.phase_mask = {false, true};
    cfg.overlap = kPi / 2;
    cfg.lead = kPi;
    cfg.tail = kPi;
    cfg.eta = 1.0;
    cfg.initial_basis = "bare";
    cfg.scan = phase_grid();
  } else if (name == "breakprobe" || name == "fig6") {
    cfg.scenario = "breakprobe";
    cfg.words = {"12o 23u 12u", "12o 23u 12o"};
    cfg.omega_g = 1.0;
  } else if (name == "qutrit") {
    cfg.scenario = "qutrit";
    cfg.scan = {"phi3", 0.0, kPi / 2, 3};
  } else if (name == "spectrum" || name == "manybody" || name == "gauge") {
    cfg.scenario = name;
  } else {
    throw Error(ErrorCode::ValidationError,
                "scenario: unknown name '" + name + "'; valid scenarios are " +
                    join(kScenarioNames) + "; presets are " + join(kPresetNames));
  }
  return cfg;
}

ScenarioConfig parse_config(const std::string& text, const ScenarioConfig& base) {
  const YAML::Node root = load(text);
  ScenarioConfig cfg = base;
  if (root.IsMap() && root["scenario"]) {
    const std::string name = read_string(root["scenario"], "scenario");
    if (name != base.scenario) {
      invalid("scenario" + at_line(root["scenario"]),
              "'" + name + "' does not match the requested '" + base.scenario + "'");
    }
  }
  layer(root, cfg);
  validate_config(cfg);
  return cfg;
}

ScenarioConfig parse_config(const std::string& text) {
  const YAML::Node root = load(text);
  if (!root.IsMap() || !root["scenario"]) {
    invalid("scenario", "required; valid scenarios are " + join(kScenarioNames));
  }
  const std::string name = read_string(root["scenario"], "scenario");
  if (std::find(kScenarioNames.begin(), kScenarioNames.end(), name) ==
      kScenarioNames.end()) {
    invalid("scenario" + at_line(root["scenario"]),
            "unknown name '" + name + "'; valid scenarios are " + join(kScenarioNames));
  }
  return parse_config(text, default_config(name));
}

void validate_config(const ScenarioConfig& cfg) {
  if (std::find(kScenarioNames.begin(), kScenarioNames.end(), cfg.scenario) ==
      kScenarioNames.end()) {
    invalid("scenario", "unknown name '" + cfg.scenario + "'; valid scenarios are " +
                            join(kScenarioNames));
  }
  const std::string& sc = cfg.scenario;
  try {
    cfg.controls.validate();
    if (sc != "spectrum" && sc != "gauge") rabi_from_controls(cfg.controls);
  } catch (const Error& e) {
    invalid("controls", e.detail());
  }

  if (cfg.initial_basis != "dressed" && cfg.initial_basis != "bare") {
    invalid("initial_basis", "expected dressed or bare");
  }
  double norm = 0.0;
  for (const auto& a : cfg.initial_state) norm += std::norm(a);
  if (std::abs(norm - 1.0) > 1e-9) {
    invalid("initial_state", "squared norm " + std::to_string(norm) + " is not 1");
  }

  for (std::size_t i = 0; i < cfg.pulses.size(); ++i) {
    const auto& p = cfg.pulses[i];
    const std::string path = "pulses[" + std::to_string(i) + "]";
    if (!(p.start >= 0.0)) invalid(path + ".start", "must be >= 0");
    if (!(p.duration > 0.0)) invalid(path + ".duration", "must be > 0");
    if (!(p.rabi > 0.0)) invalid(path + ".rabi", "must be > 0");
  }
  if (cfg.total_time) {
    double last = 0.0;
    for (const auto& p : cfg.pulses) last = std::max(last, p.end());
    if (!(*cfg.total_time >= last)) {
      invalid("total_time", "ends before the last pulse at " + std::to_string(last));
    }
  }

  const bool scanned = sc == "kscan" || sc == "phasescan" || sc == "etascan" ||
                       sc == "qutrit";
  if (scanned) {
    const std::string expected = sc == "kscan" ? "dt" : sc == "qutrit" ? "phi3" : "phi";
    if (cfg.scan.parameter != expected) {
      invalid("scan.parameter", "scenario " + sc + " scans '" + expected + "'");
    }
    if (cfg.scan.samples < 1) invalid("scan.samples", "must be >= 1");
    if (cfg.scan.samples > 100000) invalid("scan.samples", "must be <= 100000");
    if (cfg.scan.samples > 1 && !(cfg.scan.to > cfg.scan.from)) {
      invalid("scan.to", "must exceed scan.from");
    }
  }
  if (sc == "spectrum" || sc == "gauge") {
    if (cfg.grid.samples < 1 || cfg.grid.samples > 1000) {
      invalid("grid.samples", "must lie in [1, 1000]");
    }
    const auto in_domain = [&](double theta, double alpha, const std::string& path) {
      ControlParams p = cfg.controls;
      p.theta = theta;
      p.alpha = alpha;
      try {
        p.validate();
      } catch (const Error& e) {
        invalid(path, e.detail());
      }
    };
    in_domain(cfg.grid.theta_from, cfg.grid.alpha_from, "grid.theta_from");
    in_domain(cfg.grid.theta_to, cfg.grid.alpha_to, "grid.theta_to");
  }
  if (sc == "kscan" && cfg.pulses.size() != 2) {
    invalid("pulses", "kscan needs exactly two pulses");
  }
  if (sc == "evolve" && cfg.trajectory_samples < 2) {
    invalid("trajectory_samples", "must be >= 2");
  }
  if (cfg.eta && !(*cfg.eta >= 0.0 && *cfg.eta <= 1.0)) {
    invalid("eta", "must lie in [0, 1]");
  }
  if (cfg.omega_g && !(*cfg.omega_g >= 0.0)) invalid("omega_g", "must be >= 0");
  if (!(cfg.tie_tolerance > 0.0)) invalid("tie_tolerance", "must be > 0");
  if (!(cfg.omega_i > 0.0)) invalid("omega_i", "must be > 0");
  if (!(cfg.lead >= 0.0)) invalid("lead", "must be >= 0");
  if (!(cfg.tail >= 0.0)) invalid("tail", "must be >= 0");
  if (!(cfg.overlap >= 0.0 && cfg.overlap <= kDefaultPulseTime)) {
    invalid("overlap", "must lie in [0, pulse duration]");
  }

  if (sc == "phasescan" || sc == "etascan" || sc == "breakprobe") {
    if (cfg.words.empty()) invalid("words", "at least one word is required");
    for (std::size_t i = 0; i < cfg.words.size(); ++i) {
      const std::string path = "words[" + std::to_string(i) + "]";
      try {
        const BraidWord w = BraidWord::parse(cfg.words[i]);
        if (sc == "breakprobe") {
          for (const auto& l : w.letters) {
            if (l.first() == 1 && l.second() == 3) {
              invalid(path, "breakprobe accepts only 12 and 23 letters");
            }
          }
        }
        if (sc == "etascan" && !cfg.phase_mask.empty() &&
            cfg.phase_mask.size() != w.size()) {
          invalid("phase_mask", "length differs from words[0]");
        }
      } catch (const Error& e) {
        if (e.code() == ErrorCode::ValidationError) throw;
        invalid(path, e.detail());
      }
    }
    if (sc == "etascan" && cfg.words.size() != 1) {
      invalid("words", "etascan takes exactly one word");
    }
  }
}

}  // namespace tribraid::cli
