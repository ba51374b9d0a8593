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

#include <cmath>

#include "tribraid/cli.hpp"
#include "tribraid/manybody.hpp"
#include "tribraid/qutrit.hpp"

namespace tribraid::cli {

namespace {

// Runs one library call; failures keep their code and gain the call's name.
template <class F>
auto step(const char* operation, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), std::string(operation) + ": " + e.detail());
  }
}

std::vector<double> grid_axis(double from, double to, int samples) {
  return ScanSpec{"", from, to, samples}.values();
}

CVector bare_amplitudes(const ScenarioConfig& cfg, const DressedFrame& frame) {
  CVector v(4);
  for (int i = 0; i < 4; ++i) v(i) = cfg.initial_state[i];
  v.normalize();
  return cfg.initial_basis == "dressed" ? CVector(frame.vectors * v) : v;
}

std::vector<Cell> population_row(double x, const Populations& p) {
  return {x, p[0], p[1], p[2], p[3]};
}

ResultTable run_spectrum(const ScenarioConfig& cfg) {
  ResultTable t{{"theta", "alpha", "phi", "E1", "E2", "E3", "E4"}, {}};
  const auto g = cfg.grid;
  for (double theta : grid_axis(g.theta_from, g.theta_to, g.samples)) {
    for (double alpha : grid_axis(g.alpha_from, g.alpha_to, g.samples)) {
      ControlParams p = cfg.controls;
      p.theta = theta;
      p.alpha = alpha;
      const Spectrum s = step("hermitian_eig", [&] {
        return hermitian_eig(build_h4(rabi_from_controls(p), p.phi));
      });
      const auto& e = s.eigenvalues;
      t.add_row({theta, alpha, p.phi, e(0), e(1), e(2), e(3)});
    }
  }
  return t;
}

ResultTable run_evolve(const ScenarioConfig& cfg) {
  Schedule s;
  s.pulses = cfg.pulses;
  s.background = cfg.controls;
  double last = 0.0;
  for (const auto& p : s.pulses) last = std::max(last, p.end());
  s.total_time = cfg.total_time.value_or(last);

  const DressedFrame frame = step("dressed_frame", [&] { return dressed_frame(cfg.controls); });
  const PureState psi0(bare_amplitudes(cfg, frame));
  const auto traj = step("propagate", [&] {
    return propagate(s, psi0, cfg.trajectory_samples);
  });
  ResultTable t{{"t", "P1", "P2", "P3", "P4"}, {}};
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    t.add_row(population_row(traj.times[i], dressed_populations(traj.states[i], frame)));
  }
  return t;
}

ResultTable run_kscan(const ScenarioConfig& cfg) {
  TransitionScanSpec spec;
  spec.first = cfg.pulses[0].letter;
  spec.second = cfg.pulses[1].letter;
  spec.rabi = cfg.pulses[0].rabi;
  spec.duration = cfg.pulses[0].duration;
  spec.lead = spec.duration;
  spec.tail = spec.duration;
  spec.tie_tolerance = cfg.tie_tolerance;
  spec.background = cfg.controls;

  const DressedFrame frame = step("dressed_frame", [&] { return dressed_frame(cfg.controls); });
  const PureState psi0(bare_amplitudes(cfg, frame));
  const auto dts = cfg.scan.values();
  const auto curve = step("transition_scan", [&] { return transition_scan(spec, dts, psi0); });
  ResultTable t{{"dt", "K"}, {}};
  for (std::size_t i = 0; i < dts.size(); ++i) t.add_row({dts[i], curve.values[i].value});
  return t;
}

ResultTable run_phasescan(const ScenarioConfig& cfg) {
  const DressedFrame frame = step("dressed_frame", [&] { return dressed_frame(cfg.controls); });
  const PureState psi0(bare_amplitudes(cfg, frame));
  SchedulePolicy policy;
  policy.background = cfg.controls;
  const auto phis = cfg.scan.values();

  ResultTable t{{"phi"}, {}};
  std::vector<ScanCurve<Complex>> curves;
  for (std::size_t w = 0; w < cfg.words.size(); ++w) {
    const BraidWord word = BraidWord::parse(cfg.words[w]);
    curves.push_back(step("phase_scan", [&] { return phase_scan(word, phis, psi0, policy); }));
    t.columns.push_back("reF_w" + std::to_string(w + 1));
  }
  for (std::size_t w = 0; w < cfg.words.size(); ++w) {
    t.columns.push_back("imF_w" + std::to_string(w + 1));
  }
  for (std::size_t i = 0; i < phis.size(); ++i) {
    std::vector<Cell> row{phis[i]};
    for (const auto& c : curves) row.emplace_back(c.values[i].real());
    for (const auto& c : curves) row.emplace_back(c.values[i].imag());
    t.add_row(std::move(row));
  }
  return t;
}

ResultTable run_etascan(const ScenarioConfig& cfg) {
  const DressedFrame frame = step("dressed_frame", [&] { return dressed_frame(cfg.controls); });
  const CVector c = bare_amplitudes(cfg, frame);
  SchedulePolicy policy;
  policy.background = cfg.controls;
  policy.lead = cfg.lead;
  policy.tail = cfg.tail;
  policy.gap = -cfg.overlap;
  policy.phase_mask = cfg.phase_mask;
  const BraidWord word = BraidWord::parse(cfg.words[0]);
  const auto phis = cfg.scan.values();
  const std::vector<Complex> amps(c.data(), c.data() + c.size());
  const auto scan = step("coherence_scan", [&] {
    return coherence_scan(word, cfg.eta.value_or(1.0), phis, amps, policy);
  });
  ResultTable t{{"phi", "P1", "P2", "P3", "P4"}, {}};
  for (std::size_t i = 0; i < phis.size(); ++i) {
    t.add_row(population_row(phis[i], scan.curve.values[i]));
  }
  return t;
}

ResultTable run_breakprobe(const ScenarioConfig& cfg) {
  const DressedFrame frame = base_frame();
  const PureState psi0(bare_amplitudes(cfg, frame));
  ResultTable t{{"word", "P1", "P2", "P3", "P4"}, {}};
  for (const auto& text : cfg.words) {
    BraidWord word = BraidWord::parse(text);
    for (auto& l : word.letters) l = l.with_phase(cfg.word_phase);
    const Populations p = step("breaking_probe", [&] {
      return breaking_probe(word, cfg.omega_g.value_or(1.0), psi0);
    });
    t.add_row({word.label(), p[0], p[1], p[2], p[3]});
  }
  return t;
}

double sign_value(PhaseSign s) {
  switch (s) {
    case PhaseSign::plus: return 1.0;
    case PhaseSign::minus: return -1.0;
    case PhaseSign::undetermined: break;
  }
  return 0.0;
}

ResultTable run_qutrit(const ScenarioConfig& cfg) {
  const DressedFrame frame = step("dressed_frame", [&] { return dressed_frame(cfg.controls); });
  ResultTable t{{"gate", "phi3", "pattern_distance", "global_phase", "phase_sign"}, {}};
  const auto x3 = step("synth_x3", [&] { return synth_x3(frame); });
  t.add_row({std::string("X3"), 0.0, x3.pattern_distance, x3.global_phase,
             sign_value(x3.phase_sign)});
  for (double phi3 : cfg.scan.values()) {
    const auto z3 = step("synth_z3", [&] { return synth_z3(phi3, frame); });
    t.add_row({std::string("Z3"), phi3, z3.pattern_distance, z3.global_phase,
               sign_value(z3.phase_sign)});
  }
  return t;
}

ResultTable run_manybody(const ScenarioConfig& cfg) {
  ResultTable t{{"coupling", "pair", "leakage", "block_distance"}, {}};
  const double duration = kPi / cfg.omega_i;
  const std::pair<const char*, const char*> pairs[] = {{"01", "10"}, {"00", "11"}};
  for (int sign : {1, -1}) {
    const CMatrix h = step("build_pauli_sum", [&] {
      return build_pauli_sum(xy_coupling(2, 1, 2, cfg.omega_i, sign), 2);
    });
    for (const auto& [k, j] : pairs) {
      const auto r = step("realize_pi_via_hamiltonian", [&] {
        return realize_pi_via_hamiltonian(h, BasisLabel(k), BasisLabel(j), duration,
                                          Orientation::over);
      });
      t.add_row({std::string(sign > 0 ? "XX+YY" : "XX-YY"),
                 std::string(k) + "-" + j, r.leakage, r.block_distance});
    }
  }
  return t;
}

ResultTable run_gauge(const ScenarioConfig& cfg) {
  ResultTable t{{"theta", "alpha", "reF23_12", "imF23_12"}, {}};
  const auto g = cfg.grid;
  for (double theta : grid_axis(g.theta_from, g.theta_to, g.samples)) {
    for (double alpha : grid_axis(g.alpha_from, g.alpha_to, g.samples)) {
      ControlParams p = cfg.controls;
      p.theta = theta;
      p.alpha = alpha;
      const auto f = step("gauge_field", [&] { return gauge_field(p, DressedPair{2, 3}); });
      t.add_row({theta, alpha, f.f_matrix(0, 1).real(), f.f_matrix(0, 1).imag()});
    }
  }
  return t;
}

}  // namespace

void ResultTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "row has " + std::to_string(row.size()) + " cells for " +
                    std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

ResultTable run_scenario(const ScenarioConfig& cfg) {
  validate_config(cfg);
  const std::string& s = cfg.scenario;
  if (s == "spectrum") return run_spectrum(cfg);
  if (s == "evolve") return run_evolve(cfg);
  if (s == "kscan") return run_kscan(cfg);
  if (s == "phasescan") return run_phasescan(cfg);
  if (s == "etascan") return run_etascan(cfg);
  if (s == "breakprobe") return run_breakprobe(cfg);
  if (s == "qutrit") return run_qutrit(cfg);
  if (s == "manybody") return run_manybody(cfg);
  return run_gauge(cfg);
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::ValidationError:
      return 2;
    case ErrorCode::IoError:
      return 4;
    default:
      return 3;
  }
}

}  // namespace tribraid::cli
