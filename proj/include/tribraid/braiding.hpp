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
#include <span>
#include <string>
#include <vector>

#include "tribraid/model.hpp"

namespace tribraid {

enum class Orientation { over, under };

/// One crossing between two states of the degenerate triple. The pair is
/// stored with first < second; the phase multiplies |lambda_first><lambda_second|.
class BraidLetter {
 public:
  BraidLetter(int first, int second, Orientation orientation, double phase = 0.0);

  int first() const { return first_; }
  int second() const { return second_; }
  Orientation orientation() const { return orientation_; }
  double phase() const { return phase_; }

  BraidLetter with_phase(double phase) const;
  BraidLetter reversed() const;

  /// Compact text form, e.g. "12o" or "23u".
  std::string label() const;
  /// Inverse of label(); the phase is set separately.
  static BraidLetter parse(const std::string& text, double phase = 0.0);

 private:
  int first_;
  int second_;
  Orientation orientation_;
  double phase_;
};

/// Default scenario constants: unit Rabi frequency and T = pi so every pulse
/// has area pi.
inline constexpr double kDefaultRabi = 1.0;
inline constexpr double kDefaultPulseTime = kPi;

struct PulseEvent {
  BraidLetter letter;
  double start = 0.0;
  double duration = kDefaultPulseTime;
  double rabi = kDefaultRabi;

  double end() const { return start + duration; }
  double area() const { return rabi * duration; }
  bool is_ideal_pi() const;
};

/// Timed pulses on top of a background Hamiltonian. Pulses are built on the
/// dressed frame of `background`; the background generator acts whenever no
/// pulse is active.
struct Schedule {
  std::vector<PulseEvent> pulses;
  ControlParams background = ControlParams::base_point();
  double total_time = 0.0;

  /// Throws InvalidArgument on malformed pulses or total_time < last end.
  void validate() const;
};

/// Normalized amplitudes over the bare basis.
class PureState {
 public:
  explicit PureState(const CVector& bare_amplitudes);

  static PureState from_dressed(std::span<const Complex> amplitudes,
                                const DressedFrame& frame);

  const CVector& amplitudes() const { return amplitudes_; }

 private:
  CVector amplitudes_;
};

class DensityMatrix {
 public:
  /// Throws InvalidArgument unless rho is 4x4, Hermitian, unit trace and PSD.
  explicit DensityMatrix(const CMatrix& rho);

  static DensityMatrix from_pure(const PureState& psi);

  const CMatrix& rho() const { return rho_; }
  double purity() const;

 private:
  CMatrix rho_;
};

using Populations = std::array<double, 4>;

CMatrix ideal_pi(const BraidLetter& letter, const DressedFrame& frame);

/// (rabi/2)(|lambda_k><lambda_j| e^{i phase} + h.c.) in the bare basis, for
/// either orientation. The orientation sign is applied by signed_pulse_generator.
CMatrix pulse_hamiltonian(const BraidLetter& letter, double rabi,
                          const DressedFrame& frame);

/// pulse_hamiltonian negated for under-crossings, so that e^{-iHT} yields the
/// over operator and e^{+iHT} the under one.
CMatrix signed_pulse_generator(const BraidLetter& letter, double rabi,
                               const DressedFrame& frame);

/// Sum of all pulses active at t (start <= t < end); the background
/// Hamiltonian when none is. Throws OutOfRange outside [0, total_time].
CMatrix assemble_generator(const Schedule& s, double t);

/// Start/end of every piecewise-constant segment, ascending, 0 and
/// total_time included.
std::vector<double> breakpoints(const Schedule& s);

/// Product of segment propagators over the whole schedule.
CMatrix schedule_unitary(const Schedule& s);

template <class State>
struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;
};

/// Exact piecewise propagation; states are reported at `samples` uniformly
/// spaced times including 0 and total_time.
Trajectory<PureState> propagate(const Schedule& s, const PureState& psi0,
                                int samples);

Trajectory<DensityMatrix> propagate_density(const Schedule& s,
                                            const DensityMatrix& rho0,
                                            int samples);

/// Coherences between bare amplitudes scaled by eta in [0, 1].
DensityMatrix mixed_input(std::span<const Complex> c, double eta);

Populations dressed_populations(const PureState& psi, const DressedFrame& frame);
Populations dressed_populations(const DensityMatrix& rho,
                                const DressedFrame& frame);

}  // namespace tribraid
