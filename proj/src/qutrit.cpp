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

#include "tribraid/qutrit.hpp"

#include <cmath>

namespace tribraid {

namespace {

// Angle resolution below which a ratio is treated as carrying no sign.
constexpr double kSignResolution = 1e-9;

double pattern_distance(const CMatrix& block, const CMatrix& target) {
  double worst = 0.0;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      worst = std::max(worst, std::abs(std::abs(block(r, c)) - std::abs(target(r, c))));
    }
  }
  return worst;
}

QutritGateReport report(const CMatrix& bare, const DressedFrame& frame,
                        const CMatrix& target) {
  QutritGateReport out;
  out.unitary = bare;
  out.dressed = frame.vectors.adjoint() * bare * frame.vectors;
  const CMatrix block = triple_block(out.dressed);
  out.pattern_distance = pattern_distance(block, target);
  int row = 0;
  for (int r = 1; r < 3; ++r) {
    if (std::abs(block(r, 0)) > std::abs(block(row, 0))) row = r;
  }
  out.global_phase = std::arg(block(row, 0));
  return out;
}

}  // namespace

CMatrix triple_block(const CMatrix& dressed) {
  if (dressed.rows() != 4 || dressed.cols() != 4) {
    throw Error(ErrorCode::ShapeMismatch, "expected a 4x4 dressed matrix");
  }
  return dressed.topLeftCorner(3, 3);
}

QutritGateReport synth_x3(const DressedFrame& frame) {
  const CMatrix u = ideal_pi(BraidLetter(1, 2, Orientation::over), frame) *
                    ideal_pi(BraidLetter(2, 3, Orientation::over), frame);
  CMatrix target = CMatrix::Zero(3, 3);
  target(1, 0) = 1.0;
  target(2, 1) = 1.0;
  target(0, 2) = 1.0;
  return report(u, frame, target);
}

QutritGateReport synth_z3(double phi3, const DressedFrame& frame) {
  if (!std::isfinite(phi3)) {
    throw Error(ErrorCode::InvalidArgument, "phi3 must be finite");
  }
  const CMatrix u = ideal_pi(BraidLetter(2, 3, Orientation::under, phi3), frame) *
                    ideal_pi(BraidLetter(2, 3, Orientation::over, 0.0), frame) *
                    ideal_pi(BraidLetter(1, 2, Orientation::under, phi3), frame) *
                    ideal_pi(BraidLetter(1, 2, Orientation::over, 0.0), frame);
  QutritGateReport out = report(u, frame, CMatrix::Identity(3, 3));

  const CMatrix block = triple_block(out.dressed);
  const double ratio = std::arg(block(1, 1) / block(0, 0));
  const double expected = wrap_angle(phi3);
  if (std::abs(std::sin(expected)) > kSignResolution) {
    out.phase_sign = std::abs(wrap_angle(ratio - expected)) <
                             std::abs(wrap_angle(ratio + expected))
                         ? PhaseSign::plus
                         : PhaseSign::minus;
  }
  return out;
}

}  // namespace tribraid
