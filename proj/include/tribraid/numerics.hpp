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

#include <complex>

#include <Eigen/Dense>

#include "tribraid/error.hpp"

namespace tribraid {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

/// Relative tolerance on ||M - M^dagger||_F used by every Hermitian entry point.
inline constexpr double kHermitianTol = 1e-12;

/// Eigenvalues ascending; column k of `eigenvectors` pairs with eigenvalue k.
struct Spectrum {
  RVector eigenvalues;
  CMatrix eigenvectors;
};

/// Throws NotSquare / NotHermitian / InvalidArgument (non-finite entries).
void require_hermitian(const CMatrix& m);

Spectrum hermitian_eig(const CMatrix& m);

/// e^{-iHt} via the spectral decomposition of H.
CMatrix expm_ih(const CMatrix& h, double t);

/// Propagator family for one fixed generator. Diagonalizes once, then hands
/// out e^{-iHt} for any t.
class SpectralPropagator {
 public:
  explicit SpectralPropagator(const CMatrix& h);

  CMatrix at(double t) const;
  CVector apply(double t, const CVector& psi) const;

 private:
  Spectrum spectrum_;
};

double frobenius_distance(const CMatrix& a, const CMatrix& b);

/// Orthogonal projector sum_k |v_k><v_k| onto the span of the given columns.
/// Columns are assumed orthonormal; only the span matters for the result.
CMatrix projector(const CMatrix& columns);

/// Projector onto the eigenvectors whose eigenvalues lie within `tol` of the
/// lowest one. Basis-independent inside a degenerate cluster.
CMatrix lowest_cluster_projector(const Spectrum& spectrum, double tol);

/// ||U^dagger U - I||_F
double unitarity_defect(const CMatrix& u);

/// Principal argument wrapped into (-pi, pi].
double wrap_angle(double angle);

/// std::sin / std::cos with results below 1e-15 in magnitude snapped to 0,
/// so that multiples of pi/2 give exact zeros.
double snapped_sin(double x);
double snapped_cos(double x);

}  // namespace tribraid
