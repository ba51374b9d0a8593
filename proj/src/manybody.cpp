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

#include "tribraid/manybody.hpp"

#include <cmath>

namespace tribraid {

namespace {

CMatrix single_site(Pauli p) {
  CMatrix m = CMatrix::Zero(2, 2);
  switch (p) {
    case Pauli::I: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
    case Pauli::X: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case Pauli::Y: m(0, 1) = -kI; m(1, 0) = kI; break;
    case Pauli::Z: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
  }
  return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

void check_sites(int n_sites) {
  if (n_sites < 1) {
    throw Error(ErrorCode::InvalidArgument, "need at least one site");
  }
  if (n_sites > kMaxSites) {
    throw Error(ErrorCode::TooLarge, std::to_string(n_sites) + " sites exceeds " +
                                         std::to_string(kMaxSites));
  }
}

// e^{-iHt} assembled from the connected blocks of H's sparsity pattern, so
// entries between unconnected states are exactly zero.
CMatrix blockwise_propagator(const CMatrix& h, double t) {
  const Eigen::Index n = h.rows();
  std::vector<int> component(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (Eigen::Index seed = 0; seed < n; ++seed) {
    if (component[seed] >= 0) continue;
    std::vector<Eigen::Index> stack{seed};
    component[seed] = count;
    while (!stack.empty()) {
      const Eigen::Index r = stack.back();
      stack.pop_back();
      for (Eigen::Index c = 0; c < n; ++c) {
        if (component[c] < 0 && h(r, c) != Complex(0.0)) {
          component[c] = count;
          stack.push_back(c);
        }
      }
    }
    ++count;
  }

  CMatrix u = CMatrix::Zero(n, n);
  for (int k = 0; k < count; ++k) {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (component[i] == k) idx.push_back(i);
    }
    const auto m = static_cast<Eigen::Index>(idx.size());
    CMatrix block(m, m);
    for (Eigen::Index r = 0; r < m; ++r) {
      for (Eigen::Index c = 0; c < m; ++c) block(r, c) = h(idx[r], idx[c]);
    }
    const CMatrix ub = expm_ih(block, t);
    for (Eigen::Index r = 0; r < m; ++r) {
      for (Eigen::Index c = 0; c < m; ++c) u(idx[r], idx[c]) = ub(r, c);
    }
  }
  return u;
}

}  // namespace

CMatrix build_pauli_sum(const std::vector<PauliTerm>& terms, int n_sites) {
  check_sites(n_sites);
  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  CMatrix h = CMatrix::Zero(dim, dim);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& term = terms[t];
    if (static_cast<int>(term.factors.size()) != n_sites) {
      throw Error(ErrorCode::SizeMismatch,
                  "term " + std::to_string(t) + " has " +
                      std::to_string(term.factors.size()) + " factors for " +
                      std::to_string(n_sites) + " sites");
    }
    if (!std::isfinite(term.coefficient)) {
      throw Error(ErrorCode::InvalidArgument,
                  "term " + std::to_string(t) + " coefficient is not finite");
    }
    CMatrix product = single_site(term.factors[0]);
    for (int s = 1; s < n_sites; ++s) {
      product = kron(product, single_site(term.factors[s]));
    }
    h += term.coefficient * product;
  }
  return h;
}

BasisLabel::BasisLabel(std::string bits) : bits_(std::move(bits)) {
  if (bits_.empty() || bits_.find_first_not_of("01") != std::string::npos) {
    throw Error(ErrorCode::InvalidArgument,
                "basis label '" + bits_ + "' must be a non-empty 0/1 string");
  }
  check_sites(sites());
}

std::size_t BasisLabel::index() const {
  std::size_t i = 0;
  for (char b : bits_) i = (i << 1) | static_cast<std::size_t>(b == '1');
  return i;
}

CMatrix composite_pi(const BasisLabel& k, const BasisLabel& j, double phi,
                     Orientation orientation) {
  if (k.sites() != j.sites()) {
    throw Error(ErrorCode::SizeMismatch, "labels '" + k.bits() + "' and '" +
                                             j.bits() + "' differ in length");
  }
  if (k.bits() == j.bits()) {
    throw Error(ErrorCode::SameLabel, "pair '" + k.bits() + "' with itself");
  }
  const Eigen::Index dim = Eigen::Index{1} << k.sites();
  const auto ik = static_cast<Eigen::Index>(k.index());
  const auto ij = static_cast<Eigen::Index>(j.index());
  const Complex sign = orientation == Orientation::over ? -kI : kI;
  const Complex ep = std::polar(1.0, phi);

  CMatrix u = CMatrix::Identity(dim, dim);
  u(ik, ik) = 0.0;
  u(ij, ij) = 0.0;
  u(ik, ij) = sign * ep;
  u(ij, ik) = sign * std::conj(ep);
  return u;
}

PiRealization realize_pi_via_hamiltonian(const CMatrix& h, const BasisLabel& k,
                                         const BasisLabel& j, double duration,
                                         Orientation orientation, double phi) {
  require_hermitian(h);
  const CMatrix target = composite_pi(k, j, phi, orientation);
  if (h.rows() != target.rows()) {
    throw Error(ErrorCode::SizeMismatch,
                "Hamiltonian dimension " + std::to_string(h.rows()) +
                    " does not match labels of length " + std::to_string(k.sites()));
  }
  PiRealization out;
  out.unitary = blockwise_propagator(orientation == Orientation::over ? h : CMatrix(-h),
                                     duration);

  const auto ik = static_cast<Eigen::Index>(k.index());
  const auto ij = static_cast<Eigen::Index>(j.index());
  for (Eigen::Index l = 0; l < h.rows(); ++l) {
    if (l == ik || l == ij) continue;
    double out_of_l = 0.0;
    for (Eigen::Index m = 0; m < h.rows(); ++m) {
      if (m != l) out_of_l += std::norm(out.unitary(m, l));
    }
    out.leakage = std::max(out.leakage, out_of_l);
  }
  const Eigen::Index idx[2] = {ik, ij};
  for (auto r : idx) {
    for (auto c : idx) {
      out.block_distance =
          std::max(out.block_distance, std::abs(out.unitary(r, c) - target(r, c)));
    }
  }
  return out;
}

std::vector<PauliTerm> xy_coupling(int n_sites, int site_a, int site_b,
                                   double omega, int sign) {
  check_sites(n_sites);
  const auto ok = [&](int s) { return s >= 1 && s <= n_sites; };
  if (!ok(site_a) || !ok(site_b) || site_a == site_b) {
    throw Error(ErrorCode::InvalidArgument, "coupling sites must be distinct and in range");
  }
  if (sign != 1 && sign != -1) {
    throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");
  }
  PauliTerm xx{omega / 4.0, std::vector<Pauli>(n_sites, Pauli::I)};
  PauliTerm yy{sign * omega / 4.0, std::vector<Pauli>(n_sites, Pauli::I)};
  xx.factors[site_a - 1] = xx.factors[site_b - 1] = Pauli::X;
  yy.factors[site_a - 1] = yy.factors[site_b - 1] = Pauli::Y;
  return {xx, yy};
}

}  // namespace tribraid
