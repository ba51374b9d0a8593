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

#include "tribraid/numerics.hpp"

#include <cmath>
#include <string>

namespace tribraid {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DegenerateControls: return "DegenerateControls";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::DetuningTooSmall: return "DetuningTooSmall";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::EtaOutOfRange: return "EtaOutOfRange";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::TiedPopulations: return "TiedPopulations";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::UnsupportedPair: return "UnsupportedPair";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SameLabel: return "SameLabel";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

void require_hermitian(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::NotSquare, std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()) + " input");
  }
  if (!m.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "matrix has non-finite entries");
  }
  const double defect = (m - m.adjoint()).norm();
  if (defect > kHermitianTol * m.norm()) {
    throw Error(ErrorCode::NotHermitian,
                "||M - M^dagger||_F = " + std::to_string(defect));
  }
}

Spectrum hermitian_eig(const CMatrix& m) {
  require_hermitian(m);
  // Symmetrize so round-off in the lower triangle never leaks into the
  // solver (it only reads one triangle).
  const CMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::InvalidArgument, "eigensolver did not converge");
  }
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

SpectralPropagator::SpectralPropagator(const CMatrix& h)
    : spectrum_(hermitian_eig(h)) {}

CMatrix SpectralPropagator::at(double t) const {
  if (!std::isfinite(t)) {
    throw Error(ErrorCode::InvalidArgument, "non-finite duration");
  }
  const auto& v = spectrum_.eigenvectors;
  CVector phases(spectrum_.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::exp(Complex(0.0, -spectrum_.eigenvalues(k) * t));
  }
  return v * phases.asDiagonal() * v.adjoint();
}

CVector SpectralPropagator::apply(double t, const CVector& psi) const {
  const auto& v = spectrum_.eigenvectors;
  CVector coeffs = v.adjoint() * psi;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    coeffs(k) *= std::exp(Complex(0.0, -spectrum_.eigenvalues(k) * t));
  }
  return v * coeffs;
}

CMatrix expm_ih(const CMatrix& h, double t) {
  return SpectralPropagator(h).at(t);
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch,
                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
  }
  return (a - b).norm();
}

CMatrix projector(const CMatrix& columns) {
  return columns * columns.adjoint();
}

CMatrix lowest_cluster_projector(const Spectrum& spectrum, double tol) {
  const auto& ev = spectrum.eigenvalues;
  Eigen::Index count = 1;
  while (count < ev.size() && ev(count) - ev(0) <= tol) ++count;
  return projector(spectrum.eigenvectors.leftCols(count));
}

double unitarity_defect(const CMatrix& u) {
  return (u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols())).norm();
}

double wrap_angle(double angle) {
  double a = std::remainder(angle, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

namespace {
constexpr double kTrigSnap = 1e-15;
}

double snapped_sin(double x) {
  const double s = std::sin(x);
  return std::abs(s) < kTrigSnap ? 0.0 : s;
}

double snapped_cos(double x) {
  const double c = std::cos(x);
  return std::abs(c) < kTrigSnap ? 0.0 : c;
}

}  // namespace tribraid
