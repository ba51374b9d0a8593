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

#include "tribraid/braiding.hpp"

namespace tribraid {

enum class PhaseSign { plus, minus, undetermined };

struct QutritGateReport {
  /// Composed gate in the bare basis.
  CMatrix unitary;
  /// Same gate in the dressed basis; the upper-left 3x3 block is the qutrit.
  CMatrix dressed;
  /// max | |U_ij| - |target_ij| | over the triple block.
  double pattern_distance = 0.0;
  /// arg of the triple-block entry fed by |lambda_1>.
  double global_phase = 0.0;
  /// Whether successive diagonal ratios run as e^{+i phi3} or e^{-i phi3}.
  /// Always undetermined for X3.
  PhaseSign phase_sign = PhaseSign::undetermined;
};

/// pi_{12,o} pi_{23,o}: pi_{23,o} acts first. Target moduli are the cyclic
/// shift |lambda_1> -> |lambda_2> -> |lambda_3> -> |lambda_1>.
QutritGateReport synth_x3(const DressedFrame& frame);

/// pi_{23,u}(phi3) pi_{23,o}(0) pi_{12,u}(phi3) pi_{12,o}(0), rightmost first.
/// Target moduli are the identity.
QutritGateReport synth_z3(double phi3, const DressedFrame& frame);

/// Triple block of a dressed-basis 4x4 matrix.
CMatrix triple_block(const CMatrix& dressed);

}  // namespace tribraid
