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

#include <utility>

#include "tribraid/numerics.hpp"

namespace tribraid {

/// Control angles of the four-level family plus the overall Rabi scale.
/// theta in (0, pi), alpha in [0, pi], phi in [0, 2 pi), omega0 > 0.
struct ControlParams {
  double theta = kPi / 2;
  double alpha = kPi / 2;
  double phi = 0.0;
  double omega0 = 1.0;

  /// Throws InvalidArgument when any field is outside its domain.
  void validate() const;

  /// theta = alpha = pi/2, phi = 0: the operating point of every braiding
  /// experiment.
  static ControlParams base_point(double omega0 = 1.0) {
    return ControlParams{kPi / 2, kPi / 2, 0.0, omega0};
  }
};

/// Rabi frequencies and detunings entering the four-level Hamiltonian.
struct RabiSet {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double omega3 = 0.0;
  double omega4 = 0.0;
  double delta3 = 0.0;
  double delta4 = 0.0;

  /// Largest relative violation of the degeneracy conditions
  /// omega1 omega2 = omega3 omega4 and delta_{3,4} = omega_{3,4}^2/omega1 - omega1.
  double condition_residual() const;
};

RabiSet rabi_from_controls(const ControlParams& p);

/// Four-level Hamiltonian in the bare basis {|1>,|2>,|3>,|4>}, hbar = 1.
CMatrix build_h4(const RabiSet& r, double phi);

/// The analytic eigenframe. Column k of `vectors` is |lambda_{k+1}> in the
/// bare basis; columns 0..2 span the degenerate triple.
struct DressedFrame {
  CMatrix vectors;
  double lowest_eigenvalue = 0.0;
  double upper_eigenvalue = 0.0;

  CVector state(int index) const { return vectors.col(index - 1); }
  /// Projector onto span{|lambda_1>, |lambda_2>, |lambda_3>}.
  CMatrix triple_projector() const { return projector(vectors.leftCols(3)); }
};

DressedFrame dressed_frame(const ControlParams& p);

/// Frame at ControlParams::base_point(); every braiding pulse is built on it.
DressedFrame base_frame();

enum class ControlAxis { theta, alpha, phi };

/// 1-based pair of dressed-state indices, distinct, each in 1..4.
struct DressedPair {
  int first = 1;
  int second = 2;
};

inline constexpr double kGaugeStep = 1e-5;

/// A^{jk}_mu = i <lambda_j | d_mu lambda_k> restricted to `pair`, by central
/// differences of the analytic frame. Throws StepTooLarge when p +- h/2 leaves
/// the valid parameter domain.
CMatrix gauge_connection(const ControlParams& p, ControlAxis mu,
                         DressedPair pair, double h = kGaugeStep);

struct GaugeResult {
  CMatrix a_theta;
  CMatrix a_alpha;
  CMatrix f_matrix;  // F_{theta alpha} on the pair
};

/// F = d_theta A_alpha - d_alpha A_theta - i [A_theta, A_alpha], with the
/// outer derivatives again taken by central differences of step h.
GaugeResult gauge_field(const ControlParams& p, DressedPair pair,
                        double h = kGaugeStep);

/// Five levels, the last one shared by all couplings (detuned by delta5).
struct FivePodSpec {
  double omegap1 = 0.0;
  double omegap2 = 0.0;
  double omegap3 = 0.0;
  double omegap4 = 0.0;
  double delta5 = 0.0;
  double phi = 0.0;
};

/// Reduction is only trusted for delta5 above this multiple of max omega'.
inline constexpr double kMinDetuningRatio = 10.0;

CMatrix build_five_pod(const FivePodSpec& s);

struct ReducedModel {
  RabiSet rabi;
  double phi = 0.0;
};

/// Adiabatic elimination of level 5. Throws InvalidArgument when
/// omegap1 != omegap2 and DetuningTooSmall when delta5 <= 10 max omega'.
ReducedModel reduce_five_pod(const FivePodSpec& s);

}  // namespace tribraid
