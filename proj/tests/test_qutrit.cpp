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

#include "oracles.hpp"
#include "tribraid/qutrit.hpp"

using namespace tribraid;

namespace {

double offdiag(const CMatrix& m) {
  double worst = 0.0;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (r != c) worst = std::max(worst, std::abs(m(r, c)));
    }
  }
  return worst;
}

// Distance from a multiple of the identity with unit-modulus factor.
double from_identity_up_to_phase(const CMatrix& m) {
  const Complex phase = m(0, 0) / std::abs(m(0, 0));
  return oracle::max_abs(m - phase * CMatrix::Identity(m.rows(), m.cols()));
}

}  // namespace

TEST_CASE("synth_x3 cycles the triple") {
  const DressedFrame f = base_frame();
  const QutritGateReport x = synth_x3(f);
  CHECK(x.pattern_distance <= 1e-12);
  CHECK(x.phase_sign == PhaseSign::undetermined);

  const CMatrix block = triple_block(x.dressed);
  CHECK(unitarity_defect(block) <= 1e-12);
  for (int r = 0; r < 3; ++r) {
    int unit = 0;
    for (int c = 0; c < 3; ++c) unit += std::abs(std::abs(block(r, c)) - 1.0) <= 1e-12;
    CHECK(unit == 1);
  }
  CHECK(std::abs(block(1, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(block(2, 1)) == doctest::Approx(1.0));
  CHECK(std::abs(block(0, 2)) == doctest::Approx(1.0));
  CHECK(std::abs(x.dressed(3, 3)) == doctest::Approx(1.0).epsilon(1e-15));

  CHECK(from_identity_up_to_phase(block * block * block) <= 1e-10);

  const CMatrix p4 = f.state(4) * f.state(4).adjoint();
  CHECK(oracle::max_abs(x.unitary * p4 - p4 * x.unitary) <= 1e-15);

  // Oracle: the same product of dressed-basis operators.
  const CMatrix ref = oracle::ideal_pi_dressed(1, 2, true, 0.0) * oracle::ideal_pi_dressed(2, 3, true, 0.0);
  CHECK(oracle::max_abs(x.dressed - ref) <= 1e-12);
}

TEST_CASE("synth_z3 is diagonal with graded phases") {
  const DressedFrame f = base_frame();
  for (double phi3 : {0.0, kPi / 4, kPi / 2, 1.3, -0.8}) {
    const QutritGateReport z = synth_z3(phi3, f);
    const CMatrix block = triple_block(z.dressed);
    CHECK(offdiag(block) <= 1e-12);
    CHECK(z.pattern_distance <= 1e-12);
    const double r21 = std::arg(block(1, 1) / block(0, 0));
    const double r32 = std::arg(block(2, 2) / block(1, 1));
    CHECK(std::abs(std::abs(r21) - std::abs(wrap_angle(phi3))) <= 1e-12);
    CHECK(std::abs(std::abs(r32) - std::abs(wrap_angle(phi3))) <= 1e-12);
    CHECK(std::abs(std::abs(z.dressed(3, 3)) - 1.0) <= 1e-14);

    const CMatrix back = triple_block(synth_z3(-phi3, f).dressed);
    CHECK(from_identity_up_to_phase(block * back) <= 1e-12);

    // Oracle: the four dressed-basis operators multiplied out.
    const CMatrix ref = oracle::ideal_pi_dressed(2, 3, false, phi3) * oracle::ideal_pi_dressed(2, 3, true, 0.0) *
                        oracle::ideal_pi_dressed(1, 2, false, phi3) * oracle::ideal_pi_dressed(1, 2, true, 0.0);
    CHECK(oracle::max_abs(z.dressed - ref) <= 1e-12);
  }
  CHECK(from_identity_up_to_phase(triple_block(synth_z3(0.0, f).dressed)) <= 1e-12);
  CHECK(synth_z3(0.0, f).phase_sign == PhaseSign::undetermined);
  // The stated sequence runs the phases as e^{-i phi3} per level.
  CHECK(synth_z3(kPi / 4, f).phase_sign == PhaseSign::minus);
  CHECK(synth_z3(kPi / 2, f).phase_sign == PhaseSign::minus);
}
