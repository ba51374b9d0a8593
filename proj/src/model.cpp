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

#include "tribraid/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tribraid {

namespace {

bool finite(double x) { return std::isfinite(x); }

double rel_residual(double lhs, double rhs) {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
  return std::abs(lhs - rhs) / scale;
}

// Columns |lambda_1>..|lambda_4> built from |b> and |c>. Valid for any real
// angles; domain checks live in the callers.
CMatrix frame_vectors(double theta, double alpha, double phi) {
  const double st = snapped_sin(theta);
  const double ct = snapped_cos(theta);
  const double sa = snapped_sin(alpha);
  const double ca = snapped_cos(alpha);
  const Complex em = std::polar(1.0, -phi);
  const double r = std::sqrt(0.5);

  CVector k1 = CVector::Unit(4, 0);
  CVector k2 = CVector::Unit(4, 1);
  CVector k3 = CVector::Unit(4, 2);
  CVector k4 = CVector::Unit(4, 3);

  const CVector b = r * (k1 + em * k2);
  const CVector c = st * b + ct * k3;

  CMatrix v(4, 4);
  v.col(0) = r * (k1 - em * k2);
  v.col(1) = ct * b - st * k3;
  v.col(2) = ca * c - em * sa * k4;
  v.col(3) = sa * c + em * ca * k4;
  return v;
}

ControlParams shifted(ControlParams p, ControlAxis mu, double by) {
  switch (mu) {
    case ControlAxis::theta: p.theta += by; break;
    case ControlAxis::alpha: p.alpha += by; break;
    case ControlAxis::phi: p.phi += by; break;
  }
  return p;
}

void check_pair(DressedPair pair) {
  const auto ok = [](int i) { return i >= 1 && i <= 4; };
  if (!ok(pair.first) || !ok(pair.second) || pair.first == pair.second) {
    throw Error(ErrorCode::InvalidArgument,
                "dressed pair (" + std::to_string(pair.first) + "," +
                    std::to_string(pair.second) + ")");
  }
}

// reach: how far the finite-difference stencil strays from p on each axis.
void check_reach(const ControlParams& p, double h, double reach) {
  if (!(h > 0.0) || !finite(h)) {
    throw Error(ErrorCode::InvalidArgument, "finite-difference step must be > 0");
  }
  if (p.theta - reach <= 0.0 || p.theta + reach >= kPi) {
    throw Error(ErrorCode::StepTooLarge,
                "theta +- " + std::to_string(reach) + " leaves (0, pi)");
  }
  if (p.alpha - reach < 0.0 || p.alpha + reach > kPi) {
    throw Error(ErrorCode::StepTooLarge,
                "alpha +- " + std::to_string(reach) + " leaves [0, pi]");
  }
}

CMatrix connection_unchecked(const ControlParams& p, ControlAxis mu,
                             DressedPair pair, double h) {
  const CMatrix centre = frame_vectors(p.theta, p.alpha, p.phi);
  const ControlParams lo = shifted(p, mu, -0.5 * h);
  const ControlParams hi = shifted(p, mu, 0.5 * h);
  const CMatrix derivative = (frame_vectors(hi.theta, hi.alpha, hi.phi) -
                              frame_vectors(lo.theta, lo.alpha, lo.phi)) /
                             h;
  const int idx[2] = {pair.first - 1, pair.second - 1};
  CMatrix a(2, 2);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      a(r, c) = kI * centre.col(idx[r]).dot(derivative.col(idx[c]));
    }
  }
  return a;
}

}  // namespace

void ControlParams::validate() const {
  if (!finite(theta) || theta <= 0.0 || theta >= kPi) {
    throw Error(ErrorCode::InvalidArgument, "theta must lie in (0, pi)");
  }
  if (!finite(alpha) || alpha < 0.0 || alpha > kPi) {
    throw Error(ErrorCode::InvalidArgument, "alpha must lie in [0, pi]");
  }
  if (!finite(phi) || phi < 0.0 || phi >= 2.0 * kPi) {
    throw Error(ErrorCode::InvalidArgument, "phi must lie in [0, 2 pi)");
  }
  if (!finite(omega0) || omega0 <= 0.0) {
    throw Error(ErrorCode::InvalidArgument, "omega0 must be positive");
  }
}

double RabiSet::condition_residual() const {
  double worst = rel_residual(omega1 * omega2, omega3 * omega4);
  if (omega1 > 0.0) {
    worst = std::max(worst,
                     rel_residual(delta3, omega3 * omega3 / omega1 - omega1));
    worst = std::max(worst,
                     rel_residual(delta4, omega4 * omega4 / omega1 - omega1));
  }
  return worst;
}

RabiSet rabi_from_controls(const ControlParams& p) {
  p.validate();
  const double st = snapped_sin(p.theta);
  const double ct = snapped_cos(p.theta);
  const double sa = snapped_sin(p.alpha);
  const double ca = snapped_cos(p.alpha);

  RabiSet r;
  r.omega1 = p.omega0 * sa * st;
  if (r.omega1 == 0.0) {
    throw Error(ErrorCode::DegenerateControls,
                "sin(alpha) sin(theta) = 0 makes the detunings singular");
  }
  const double cot_theta = ct == 0.0 ? 0.0 : ct / st;
  r.omega2 = 2.0 * p.omega0 * ca * cot_theta;
  r.omega3 = std::sqrt(2.0) * p.omega0 * sa * ct;
  r.omega4 = std::sqrt(2.0) * p.omega0 * ca;
  r.delta3 = r.omega3 * r.omega3 / r.omega1 - r.omega1;
  r.delta4 = r.omega4 * r.omega4 / r.omega1 - r.omega1;
  return r;
}

CMatrix build_h4(const RabiSet& r, double phi) {
  const Complex ep = std::polar(1.0, phi);
  const Complex em = std::conj(ep);
  CMatrix h(4, 4);
  // clang-format off
  h << 0.0,             r.omega1 * ep,  r.omega3,       r.omega4 * ep,
       r.omega1 * em,   0.0,            r.omega3 * em,  r.omega4,
       r.omega3,        r.omega3 * ep,  r.delta3,       r.omega2 * ep,
       r.omega4 * em,   r.omega4,       r.omega2 * em,  r.delta4;
  // clang-format on
  return 0.5 * h;
}

DressedFrame dressed_frame(const ControlParams& p) {
  const CMatrix h = build_h4(rabi_from_controls(p), p.phi);
  DressedFrame frame;
  frame.vectors = frame_vectors(p.theta, p.alpha, p.phi);
  frame.lowest_eigenvalue =
      frame.vectors.col(0).dot(h * frame.vectors.col(0)).real();
  frame.upper_eigenvalue =
      frame.vectors.col(3).dot(h * frame.vectors.col(3)).real();
  return frame;
}

DressedFrame base_frame() { return dressed_frame(ControlParams::base_point()); }

CMatrix gauge_connection(const ControlParams& p, ControlAxis mu,
                         DressedPair pair, double h) {
  p.validate();
  check_pair(pair);
  check_reach(p, h, mu == ControlAxis::phi ? 0.0 : 0.5 * h);
  return connection_unchecked(p, mu, pair, h);
}

GaugeResult gauge_field(const ControlParams& p, DressedPair pair, double h) {
  p.validate();
  check_pair(pair);
  check_reach(p, h, h);

  GaugeResult g;
  g.a_theta = connection_unchecked(p, ControlAxis::theta, pair, h);
  g.a_alpha = connection_unchecked(p, ControlAxis::alpha, pair, h);

  const auto d_along = [&](ControlAxis outer, ControlAxis inner) {
    const CMatrix hi = connection_unchecked(shifted(p, outer, 0.5 * h), inner, pair, h);
    const CMatrix lo = connection_unchecked(shifted(p, outer, -0.5 * h), inner, pair, h);
    return CMatrix((hi - lo) / h);
  };
  const CMatrix commutator = g.a_theta * g.a_alpha - g.a_alpha * g.a_theta;
  g.f_matrix = d_along(ControlAxis::theta, ControlAxis::alpha) -
               d_along(ControlAxis::alpha, ControlAxis::theta) - kI * commutator;
  return g;
}

CMatrix build_five_pod(const FivePodSpec& s) {
  const Complex em = std::polar(1.0, -s.phi);
  CMatrix h = CMatrix::Zero(5, 5);
  const Complex column[4] = {s.omegap1, s.omegap2 * em, s.omegap3,
                             s.omegap4 * em};
  for (int i = 0; i < 4; ++i) {
    h(i, 4) = column[i];
    h(4, i) = std::conj(column[i]);
  }
  h(4, 4) = -2.0 * s.delta5;
  return 0.5 * h;
}

ReducedModel reduce_five_pod(const FivePodSpec& s) {
  const double values[5] = {s.omegap1, s.omegap2, s.omegap3, s.omegap4,
                            s.delta5};
  for (double v : values) {
    if (!finite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite five-pod parameters");
  }
  if (rel_residual(s.omegap1, s.omegap2) > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "reduction requires omega'_1 = omega'_2");
  }
  const double largest = std::max({std::abs(s.omegap1), std::abs(s.omegap2),
                                   std::abs(s.omegap3), std::abs(s.omegap4)});
  if (!(s.delta5 > kMinDetuningRatio * largest)) {
    throw Error(ErrorCode::DetuningTooSmall,
                "delta5 = " + std::to_string(s.delta5) + " <= 10 max omega' = " +
                    std::to_string(kMinDetuningRatio * largest));
  }
  const double d = 2.0 * s.delta5;
  ReducedModel out;
  out.phi = s.phi;
  out.rabi.omega1 = s.omegap1 * s.omegap1 / d;
  out.rabi.omega3 = s.omegap1 * s.omegap3 / d;
  out.rabi.omega4 = s.omegap1 * s.omegap4 / d;
  out.rabi.omega2 = s.omegap3 * s.omegap4 / d;
  out.rabi.delta3 = (s.omegap3 * s.omegap3 - s.omegap1 * s.omegap1) / d;
  out.rabi.delta4 = (s.omegap4 * s.omegap4 - s.omegap1 * s.omegap1) / d;
  return out;
}

}  // namespace tribraid
