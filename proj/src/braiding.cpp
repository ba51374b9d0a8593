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

#include "tribraid/braiding.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace tribraid {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kStateTol = 1e-12;

bool in_triple(int i) { return i >= 1 && i <= 3; }

// Index of the triple state left untouched by a letter on (k, j).
int spectator(const BraidLetter& letter) {
  return 6 - letter.first() - letter.second();
}

}  // namespace

BraidLetter::BraidLetter(int first, int second, Orientation orientation,
                         double phase)
    : first_(std::min(first, second)),
      second_(std::max(first, second)),
      orientation_(orientation),
      phase_(phase) {
  if (!in_triple(first) || !in_triple(second) || first == second) {
    throw Error(ErrorCode::InvalidArgument,
                "braid letter pair (" + std::to_string(first) + "," +
                    std::to_string(second) +
                    ") must be two distinct indices from {1,2,3}");
  }
  if (!std::isfinite(phase)) {
    throw Error(ErrorCode::InvalidArgument, "braid letter phase is not finite");
  }
}

BraidLetter BraidLetter::with_phase(double phase) const {
  return BraidLetter(first_, second_, orientation_, phase);
}

BraidLetter BraidLetter::reversed() const {
  return BraidLetter(first_, second_,
                     orientation_ == Orientation::over ? Orientation::under
                                                       : Orientation::over,
                     phase_);
}

std::string BraidLetter::label() const {
  std::string out = std::to_string(first_) + std::to_string(second_);
  out += orientation_ == Orientation::over ? 'o' : 'u';
  return out;
}

BraidLetter BraidLetter::parse(const std::string& text, double phase) {
  const auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  const bool shape_ok = text.size() == 3 && digit(text[0]) && digit(text[1]) &&
                        (text[2] == 'o' || text[2] == 'u');
  if (!shape_ok) {
    throw Error(ErrorCode::InvalidArgument,
                "braid letter '" + text + "' is not of the form <k><j><o|u>");
  }
  return BraidLetter(text[0] - '0', text[1] - '0',
                     text[2] == 'o' ? Orientation::over : Orientation::under,
                     phase);
}

bool PulseEvent::is_ideal_pi() const {
  return std::abs(area() - kPi) <= 1e-12;
}

void Schedule::validate() const {
  background.validate();
  if (!std::isfinite(total_time) || total_time < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "total_time must be >= 0");
  }
  for (std::size_t i = 0; i < pulses.size(); ++i) {
    const auto& p = pulses[i];
    const std::string where = "pulse " + std::to_string(i) + ": ";
    if (!std::isfinite(p.start) || p.start < 0.0) {
      throw Error(ErrorCode::InvalidArgument, where + "start must be >= 0");
    }
    if (!std::isfinite(p.duration) || p.duration <= 0.0) {
      throw Error(ErrorCode::InvalidArgument, where + "duration must be > 0");
    }
    if (!std::isfinite(p.rabi) || p.rabi <= 0.0) {
      throw Error(ErrorCode::InvalidArgument, where + "rabi must be > 0");
    }
    if (p.end() > total_time) {
      throw Error(ErrorCode::InvalidArgument,
                  where + "ends after total_time " + std::to_string(total_time));
    }
  }
}

PureState::PureState(const CVector& bare_amplitudes)
    : amplitudes_(bare_amplitudes) {
  if (amplitudes_.size() != 4) {
    throw Error(ErrorCode::InvalidArgument, "state must have 4 amplitudes");
  }
  if (!amplitudes_.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "state has non-finite amplitudes");
  }
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > kNormTol) {
    throw Error(ErrorCode::NotNormalized,
                "sum |a_i|^2 = " + std::to_string(amplitudes_.squaredNorm()));
  }
}

PureState PureState::from_dressed(std::span<const Complex> amplitudes,
                                  const DressedFrame& frame) {
  if (amplitudes.size() != 4) {
    throw Error(ErrorCode::InvalidArgument, "state must have 4 amplitudes");
  }
  const CVector a = Eigen::Map<const CVector>(amplitudes.data(), 4);
  return PureState(frame.vectors * a);
}

DensityMatrix::DensityMatrix(const CMatrix& rho) : rho_(rho) {
  if (rho_.rows() != 4 || rho_.cols() != 4) {
    throw Error(ErrorCode::InvalidArgument, "density matrix must be 4x4");
  }
  const Spectrum spectrum = hermitian_eig(rho_);
  const double trace = rho_.trace().real();
  if (std::abs(trace - 1.0) > kStateTol) {
    throw Error(ErrorCode::InvalidArgument,
                "density matrix trace " + std::to_string(trace));
  }
  if (spectrum.eigenvalues(0) < -kStateTol) {
    throw Error(ErrorCode::InvalidArgument,
                "density matrix has negative eigenvalue " +
                    std::to_string(spectrum.eigenvalues(0)));
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  const CVector& a = psi.amplitudes();
  return DensityMatrix(a * a.adjoint());
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

CMatrix ideal_pi(const BraidLetter& letter, const DressedFrame& frame) {
  const CVector k = frame.state(letter.first());
  const CVector j = frame.state(letter.second());
  const CVector l = frame.state(spectator(letter));
  const CVector top = frame.state(4);
  const Complex ep = std::polar(1.0, letter.phase());
  const Complex sign = letter.orientation() == Orientation::over ? -kI : kI;
  const CMatrix swap = k * j.adjoint() * ep + j * k.adjoint() * std::conj(ep);
  return sign * swap + l * l.adjoint() + top * top.adjoint();
}

CMatrix pulse_hamiltonian(const BraidLetter& letter, double rabi,
                          const DressedFrame& frame) {
  const CVector k = frame.state(letter.first());
  const CVector j = frame.state(letter.second());
  const Complex ep = std::polar(1.0, letter.phase());
  const CMatrix coupling = k * j.adjoint() * ep;
  return 0.5 * rabi * (coupling + coupling.adjoint());
}

CMatrix signed_pulse_generator(const BraidLetter& letter, double rabi,
                               const DressedFrame& frame) {
  const double sign = letter.orientation() == Orientation::over ? 1.0 : -1.0;
  return sign * pulse_hamiltonian(letter, rabi, frame);
}

namespace {

CMatrix generator_at(const Schedule& s, const DressedFrame& frame,
                     const CMatrix& background, double t) {
  CMatrix h = CMatrix::Zero(4, 4);
  bool any = false;
  for (const auto& p : s.pulses) {
    if (p.start <= t && t < p.end()) {
      h += signed_pulse_generator(p.letter, p.rabi, frame);
      any = true;
    }
  }
  return any ? h : background;
}

struct Segment {
  double begin;
  double end;
  SpectralPropagator propagator;
};

std::vector<Segment> segments(const Schedule& s) {
  s.validate();
  const DressedFrame frame = dressed_frame(s.background);
  const CMatrix background =
      build_h4(rabi_from_controls(s.background), s.background.phi);
  const auto cuts = breakpoints(s);
  std::vector<Segment> out;
  out.reserve(cuts.size());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    out.push_back(Segment{cuts[i], cuts[i + 1],
                          SpectralPropagator(generator_at(s, frame, background, mid))});
  }
  return out;
}

std::vector<double> sample_times(double total, int samples) {
  if (samples < 2) {
    throw Error(ErrorCode::InvalidArgument, "samples must be >= 2");
  }
  std::vector<double> times(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    times[static_cast<std::size_t>(i)] = total * i / (samples - 1);
  }
  times.back() = total;
  return times;
}

// Walks the segments once. Intermediate samples are evolved from the state at
// their segment start, so the state at each breakpoint (and hence the final
// state) does not depend on how many samples were requested.
template <class State, class Evolve>
Trajectory<State> walk(const Schedule& s, const State& initial, int samples,
                       Evolve evolve) {
  const auto times = sample_times(s.total_time, samples);
  const auto segs = segments(s);
  Trajectory<State> out;
  out.times = times;
  out.states.reserve(times.size());

  State current = initial;
  std::size_t next = 0;
  for (const auto& seg : segs) {
    while (next < times.size() && times[next] < seg.end) {
      out.states.push_back(evolve(seg.propagator, times[next] - seg.begin, current));
      ++next;
    }
    current = evolve(seg.propagator, seg.end - seg.begin, current);
  }
  while (next < times.size()) {
    out.states.push_back(current);
    ++next;
  }
  return out;
}

}  // namespace

CMatrix assemble_generator(const Schedule& s, double t) {
  s.validate();
  if (!(t >= 0.0 && t <= s.total_time)) {
    throw Error(ErrorCode::OutOfRange,
                "t = " + std::to_string(t) + " outside [0, total_time]");
  }
  const DressedFrame frame = dressed_frame(s.background);
  const CMatrix background =
      build_h4(rabi_from_controls(s.background), s.background.phi);
  return generator_at(s, frame, background, t);
}

std::vector<double> breakpoints(const Schedule& s) {
  std::vector<double> cuts{0.0, s.total_time};
  for (const auto& p : s.pulses) {
    cuts.push_back(p.start);
    cuts.push_back(p.end());
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

CMatrix schedule_unitary(const Schedule& s) {
  CMatrix u = CMatrix::Identity(4, 4);
  for (const auto& seg : segments(s)) {
    u = seg.propagator.at(seg.end - seg.begin) * u;
  }
  return u;
}

Trajectory<PureState> propagate(const Schedule& s, const PureState& psi0,
                                int samples) {
  return walk(s, psi0, samples,
              [](const SpectralPropagator& p, double dt, const PureState& psi) {
                return PureState(p.apply(dt, psi.amplitudes()));
              });
}

Trajectory<DensityMatrix> propagate_density(const Schedule& s,
                                            const DensityMatrix& rho0,
                                            int samples) {
  return walk(s, rho0, samples,
              [](const SpectralPropagator& p, double dt, const DensityMatrix& rho) {
                const CMatrix u = p.at(dt);
                return DensityMatrix(u * rho.rho() * u.adjoint());
              });
}

DensityMatrix mixed_input(std::span<const Complex> c, double eta) {
  if (c.size() != 4) {
    throw Error(ErrorCode::InvalidArgument, "mixed input needs 4 amplitudes");
  }
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw Error(ErrorCode::EtaOutOfRange,
                "eta = " + std::to_string(eta) + " outside [0, 1]");
  }
  double norm = 0.0;
  for (const auto& ci : c) norm += std::norm(ci);
  if (std::abs(norm - 1.0) > kNormTol) {
    throw Error(ErrorCode::NotNormalized, "sum |c_i|^2 = " + std::to_string(norm));
  }
  CMatrix rho(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      rho(i, j) = i == j ? Complex(std::norm(c[i]), 0.0)
                         : eta * c[i] * std::conj(c[j]);
    }
  }
  return DensityMatrix(rho);
}

Populations dressed_populations(const PureState& psi, const DressedFrame& frame) {
  Populations out{};
  for (int i = 0; i < 4; ++i) {
    out[i] = std::norm(frame.vectors.col(i).dot(psi.amplitudes()));
  }
  return out;
}

Populations dressed_populations(const DensityMatrix& rho,
                                const DressedFrame& frame) {
  Populations out{};
  for (int i = 0; i < 4; ++i) {
    const CVector v = frame.vectors.col(i);
    out[i] = std::max(0.0, v.dot(rho.rho() * v).real());
  }
  return out;
}

}  // namespace tribraid
