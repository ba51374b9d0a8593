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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tribraid/braiding.hpp"

namespace tribraid {

/// Letters in application order: letters[0] acts first. The operator product
/// pi_{12,u} pi_{23,u} pi_{12,o} is therefore the word "12o 23u 12u".
struct BraidWord {
  std::vector<BraidLetter> letters;

  /// Space- or dash-separated letter labels, e.g. "12o 23u 12u".
  static BraidWord parse(const std::string& text);
  /// Dash-joined labels ("12o-23u-12u"); "id" for the empty word.
  std::string label() const;
  std::size_t size() const { return letters.size(); }
};

/// Populations closer than this are treated as tied.
inline constexpr double kTieTolerance = 1e-6;

/// Score m for the largest population down to 1 for the smallest.
std::vector<int> rank_relabel(std::span<const double> populations,
                              double eps = kTieTolerance);

enum class KMode { discrete, continuous };

struct KValue {
  double value = 0.0;
  KMode mode = KMode::discrete;
  /// A_i (discrete) or the interpolated score (continuous) for output slot i.
  std::vector<double> scores;
  /// Exact product for discrete mode.
  std::optional<std::uint64_t> exact;
};

/// K = prod_i A_i^i where A_i is the score of the input level found in output
/// slot i. Throws NotAPermutation or TiedPopulations.
KValue k_discrete(std::span<const double> input, std::span<const double> output,
                  double eps = kTieTolerance);

/// Scores from the piecewise-linear interpolant through (input value, score),
/// clamped to [1, m]. Agrees with k_discrete on exact permutations.
KValue k_continuous(std::span<const double> input,
                    std::span<const double> output, double eps = kTieTolerance);

/// k_discrete when the output is a permutation within eps, else k_continuous.
KValue k_classify(std::span<const double> input, std::span<const double> output,
                  double eps = kTieTolerance);

/// +1 per over-crossing, -1 per under-crossing.
int writhe(const BraidWord& word);

template <class Payload>
struct ScanCurve {
  std::string parameter;
  std::vector<double> samples;
  std::vector<Payload> values;
};

/// Placement of a word's pulses in time. Consecutive pulses start
/// duration + gap apart, so a negative gap overlaps neighbours.
struct SchedulePolicy {
  double lead = 0.0;
  double gap = 0.0;
  double tail = 0.0;
  double rabi = kDefaultRabi;
  double duration = kDefaultPulseTime;
  /// Which letters take the scanned phase; empty means all of them. Letters
  /// left out keep their own phase.
  std::vector<bool> phase_mask;
  ControlParams background = ControlParams::base_point();
};

Schedule build_schedule(const BraidWord& word, double phi,
                        const SchedulePolicy& policy);

/// F(phi) = <psi_f | psi_i> for each phase sample.
ScanCurve<Complex> phase_scan(const BraidWord& word,
                              std::span<const double> phi_samples,
                              const PureState& psi0,
                              const SchedulePolicy& policy = {});

struct CoherenceScan {
  ScanCurve<Populations> curve;
  Populations peak_to_peak{};
};

/// Dressed populations after evolving mixed_input(c, eta), per phase sample.
/// `c` are bare-basis amplitudes.
CoherenceScan coherence_scan(const BraidWord& word, double eta,
                             std::span<const double> phi_samples,
                             std::span<const Complex> c,
                             const SchedulePolicy& policy = {});

/// The global perturbation added to every pulse: omega_g times
/// [[0,-1,0,0],[-1,0,0,0],[0,0,-1,0],[0,0,0,-1]] in the bare basis.
CMatrix breaking_hamiltonian(double omega_g);

/// prod_i exp(-i (H_g + s_i H_i) T) over the word, s_i = +1 over / -1 under,
/// pulses back to back on the base frame. Only (1,2) and (2,3) letters are
/// accepted (UnsupportedPair otherwise).
CMatrix breaking_unitary(const BraidWord& word, double omega_g,
                         double rabi = kDefaultRabi,
                         double duration = kDefaultPulseTime);

Populations breaking_probe(const BraidWord& word, double omega_g,
                           const PureState& psi0, double rabi = kDefaultRabi,
                           double duration = kDefaultPulseTime);

/// Two letters whose relative start time dt = t_second - t_first is scanned.
struct TransitionScanSpec {
  BraidLetter first{1, 2, Orientation::over, kPi / 2};
  BraidLetter second{2, 3, Orientation::under, kPi / 2};
  double rabi = kDefaultRabi;
  double duration = kDefaultPulseTime;
  /// Background windows before the earlier and after the later pulse.
  double lead = kDefaultPulseTime;
  double tail = kDefaultPulseTime;
  double tie_tolerance = kTieTolerance;
  ControlParams background = ControlParams::base_point();
};

Schedule two_pulse_schedule(const TransitionScanSpec& spec, double dt);

/// K of the triple populations against dt. Discrete where the output is a
/// permutation of the input, continuous elsewhere.
ScanCurve<KValue> transition_scan(const TransitionScanSpec& spec,
                                  std::span<const double> dt_samples,
                                  const PureState& psi0);

/// Throws InvalidArgument unless samples are finite and strictly increasing.
void require_increasing(std::span<const double> samples, const std::string& what);

}  // namespace tribraid
