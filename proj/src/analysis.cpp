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

#include "tribraid/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace tribraid {

namespace {

void require_same_size(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "input has " + std::to_string(a.size()) +
                    " populations, output has " + std::to_string(b.size()));
  }
  if (a.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "need at least two populations");
  }
}

std::array<double, 3> triple(const Populations& p) { return {p[0], p[1], p[2]}; }

}  // namespace

BraidWord BraidWord::parse(const std::string& text) {
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), '-', ' ');
  std::istringstream in(spaced);
  BraidWord word;
  std::string token;
  while (in >> token) {
    if (token == "id") continue;
    word.letters.push_back(BraidLetter::parse(token));
  }
  return word;
}

std::string BraidWord::label() const {
  if (letters.empty()) return "id";
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += '-';
    out += l.label();
  }
  return out;
}

std::vector<int> rank_relabel(std::span<const double> populations, double eps) {
  const std::size_t m = populations.size();
  if (m < 2) {
    throw Error(ErrorCode::InvalidArgument, "need at least two populations");
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return populations[a] < populations[b];
  });
  for (std::size_t i = 1; i < m; ++i) {
    if (populations[order[i]] - populations[order[i - 1]] <= eps) {
      throw Error(ErrorCode::TiedPopulations,
                  "populations " + std::to_string(order[i - 1] + 1) + " and " +
                      std::to_string(order[i] + 1) + " are within eps");
    }
  }
  std::vector<int> scores(m);
  for (std::size_t rank = 0; rank < m; ++rank) {
    scores[order[rank]] = static_cast<int>(rank) + 1;
  }
  return scores;
}

KValue k_discrete(std::span<const double> input, std::span<const double> output,
                  double eps) {
  require_same_size(input, output);
  const auto scores = rank_relabel(input, eps);
  const std::size_t m = input.size();

  std::vector<std::size_t> source(m);
  std::vector<bool> used(m, false);
  for (std::size_t slot = 0; slot < m; ++slot) {
    std::size_t best = 0;
    for (std::size_t level = 1; level < m; ++level) {
      if (std::abs(output[slot] - input[level]) <
          std::abs(output[slot] - input[best])) {
        best = level;
      }
    }
    if (std::abs(output[slot] - input[best]) > eps) {
      throw Error(ErrorCode::NotAPermutation,
                  "output slot " + std::to_string(slot + 1) +
                      " matches no input level within eps");
    }
    if (used[best]) {
      throw Error(ErrorCode::NotAPermutation,
                  "input level " + std::to_string(best + 1) +
                      " claimed by two output slots");
    }
    used[best] = true;
    source[slot] = best;
  }

  KValue k;
  k.mode = KMode::discrete;
  std::uint64_t product = 1;
  for (std::size_t slot = 0; slot < m; ++slot) {
    const int a = scores[source[slot]];
    k.scores.push_back(a);
    for (std::size_t e = 0; e <= slot; ++e) {
      if (product > std::numeric_limits<std::uint64_t>::max() /
                        static_cast<std::uint64_t>(a)) {
        throw Error(ErrorCode::InvalidArgument, "K overflows 64 bits");
      }
      product *= static_cast<std::uint64_t>(a);
    }
  }
  k.exact = product;
  k.value = static_cast<double>(product);
  return k;
}

KValue k_continuous(std::span<const double> input,
                    std::span<const double> output, double eps) {
  require_same_size(input, output);
  rank_relabel(input, eps);  // rejects tied inputs
  const std::size_t m = input.size();

  // Knots of the interpolant sorted by population value; knot r has score r+1.
  std::vector<double> knots(input.begin(), input.end());
  std::sort(knots.begin(), knots.end());

  KValue k;
  k.mode = KMode::continuous;
  k.value = 1.0;
  for (std::size_t slot = 0; slot < m; ++slot) {
    const double p = output[slot];
    double s;
    if (p <= knots.front()) {
      s = 1.0;
    } else if (p >= knots.back()) {
      s = static_cast<double>(m);
    } else {
      const auto hi = std::upper_bound(knots.begin(), knots.end(), p);
      const auto r = static_cast<std::size_t>(hi - knots.begin());
      const double x0 = knots[r - 1];
      const double x1 = knots[r];
      s = static_cast<double>(r) + (p - x0) / (x1 - x0);
    }
    k.scores.push_back(s);
    k.value *= std::pow(s, static_cast<double>(slot + 1));
  }
  return k;
}

KValue k_classify(std::span<const double> input, std::span<const double> output,
                  double eps) {
  try {
    return k_discrete(input, output, eps);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotAPermutation) throw;
  }
  return k_continuous(input, output, eps);
}

int writhe(const BraidWord& word) {
  int w = 0;
  for (const auto& l : word.letters) {
    w += l.orientation() == Orientation::over ? 1 : -1;
  }
  return w;
}

void require_increasing(std::span<const double> samples, const std::string& what) {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i])) {
      throw Error(ErrorCode::InvalidArgument, what + " samples must be finite");
    }
    if (i > 0 && !(samples[i] > samples[i - 1])) {
      throw Error(ErrorCode::InvalidArgument,
                  what + " samples must be strictly increasing");
    }
  }
}

Schedule build_schedule(const BraidWord& word, double phi,
                        const SchedulePolicy& policy) {
  if (!(policy.duration > 0.0) || !(policy.rabi > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "pulse duration and rabi must be > 0");
  }
  if (!(policy.lead >= 0.0) || !(policy.tail >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "lead and tail must be >= 0");
  }
  if (!(policy.gap >= -policy.duration)) {
    throw Error(ErrorCode::InvalidArgument,
                "gap below -duration would reorder the word");
  }
  if (!policy.phase_mask.empty() && policy.phase_mask.size() != word.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "phase mask has " + std::to_string(policy.phase_mask.size()) +
                    " entries for a word of " + std::to_string(word.size()));
  }

  Schedule s;
  s.background = policy.background;
  double start = policy.lead;
  double last_end = policy.lead;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const auto& letter = word.letters[i];
    const bool tracks = policy.phase_mask.empty() || policy.phase_mask[i];
    PulseEvent p{tracks ? letter.with_phase(phi) : letter, start,
                 policy.duration, policy.rabi};
    last_end = std::max(last_end, p.end());
    s.pulses.push_back(p);
    start += policy.duration + policy.gap;
  }
  s.total_time = last_end + policy.tail;
  return s;
}

ScanCurve<Complex> phase_scan(const BraidWord& word,
                              std::span<const double> phi_samples,
                              const PureState& psi0,
                              const SchedulePolicy& policy) {
  require_increasing(phi_samples, "phi");
  ScanCurve<Complex> curve;
  curve.parameter = "phi";
  curve.samples.assign(phi_samples.begin(), phi_samples.end());
  for (double phi : phi_samples) {
    const CMatrix u = schedule_unitary(build_schedule(word, phi, policy));
    const CVector final_state = u * psi0.amplitudes();
    curve.values.push_back(final_state.dot(psi0.amplitudes()));
  }
  return curve;
}

CoherenceScan coherence_scan(const BraidWord& word, double eta,
                             std::span<const double> phi_samples,
                             std::span<const Complex> c,
                             const SchedulePolicy& policy) {
  require_increasing(phi_samples, "phi");
  const DensityMatrix rho0 = mixed_input(c, eta);
  const DressedFrame frame = dressed_frame(policy.background);

  CoherenceScan out;
  out.curve.parameter = "phi";
  out.curve.samples.assign(phi_samples.begin(), phi_samples.end());
  Populations lo, hi;
  lo.fill(std::numeric_limits<double>::infinity());
  hi.fill(-std::numeric_limits<double>::infinity());
  for (double phi : phi_samples) {
    const CMatrix u = schedule_unitary(build_schedule(word, phi, policy));
    const DensityMatrix rho(u * rho0.rho() * u.adjoint());
    const Populations p = dressed_populations(rho, frame);
    for (int i = 0; i < 4; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
    out.curve.values.push_back(p);
  }
  for (int i = 0; i < 4; ++i) {
    out.peak_to_peak[i] = phi_samples.empty() ? 0.0 : hi[i] - lo[i];
  }
  return out;
}

CMatrix breaking_hamiltonian(double omega_g) {
  CMatrix h = CMatrix::Zero(4, 4);
  h(0, 1) = -1.0;
  h(1, 0) = -1.0;
  h(2, 2) = -1.0;
  h(3, 3) = -1.0;
  return omega_g * h;
}

CMatrix breaking_unitary(const BraidWord& word, double omega_g, double rabi,
                         double duration) {
  if (!(omega_g >= 0.0) || !std::isfinite(omega_g)) {
    throw Error(ErrorCode::InvalidArgument, "omega_g must be >= 0");
  }
  for (const auto& l : word.letters) {
    if (l.first() == 1 && l.second() == 3) {
      throw Error(ErrorCode::UnsupportedPair,
                  "breaking probe has no convention for (1,3) letters");
    }
  }
  const DressedFrame frame = base_frame();
  const CMatrix hg = breaking_hamiltonian(omega_g);
  CMatrix u = CMatrix::Identity(4, 4);
  for (const auto& l : word.letters) {
    u = expm_ih(hg + signed_pulse_generator(l, rabi, frame), duration) * u;
  }
  return u;
}

Populations breaking_probe(const BraidWord& word, double omega_g,
                           const PureState& psi0, double rabi, double duration) {
  const CMatrix u = breaking_unitary(word, omega_g, rabi, duration);
  return dressed_populations(PureState(u * psi0.amplitudes()), base_frame());
}

Schedule two_pulse_schedule(const TransitionScanSpec& spec, double dt) {
  if (!std::isfinite(dt)) {
    throw Error(ErrorCode::InvalidArgument, "dt must be finite");
  }
  const double t_first = spec.lead + std::max(0.0, -dt);
  const double t_second = t_first + dt;
  Schedule s;
  s.background = spec.background;
  s.pulses.push_back(PulseEvent{spec.first, t_first, spec.duration, spec.rabi});
  s.pulses.push_back(PulseEvent{spec.second, t_second, spec.duration, spec.rabi});
  s.total_time = std::max(t_first, t_second) + spec.duration + spec.tail;
  return s;
}

ScanCurve<KValue> transition_scan(const TransitionScanSpec& spec,
                                  std::span<const double> dt_samples,
                                  const PureState& psi0) {
  require_increasing(dt_samples, "dt");
  const DressedFrame frame = dressed_frame(spec.background);
  const auto input = triple(dressed_populations(psi0, frame));

  ScanCurve<KValue> curve;
  curve.parameter = "dt";
  curve.samples.assign(dt_samples.begin(), dt_samples.end());
  for (double dt : dt_samples) {
    const CMatrix u = schedule_unitary(two_pulse_schedule(spec, dt));
    const auto output =
        triple(dressed_populations(PureState(u * psi0.amplitudes()), frame));
    curve.values.push_back(k_classify(input, output, spec.tie_tolerance));
  }
  return curve;
}

}  // namespace tribraid
