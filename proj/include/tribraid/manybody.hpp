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

#include <string>
#include <vector>

#include "tribraid/braiding.hpp"

namespace tribraid {

enum class Pauli { I, X, Y, Z };

/// coefficient * (factors[0] (x) factors[1] (x) ...), site 1 first.
struct PauliTerm {
  double coefficient = 0.0;
  std::vector<Pauli> factors;
};

/// Dense matrices only; 2^10 is the largest supported dimension.
inline constexpr int kMaxSites = 10;

/// Throws SizeMismatch when a term length differs from n_sites, TooLarge
/// above kMaxSites, InvalidArgument on non-finite coefficients.
CMatrix build_pauli_sum(const std::vector<PauliTerm>& terms, int n_sites);

/// Product state |e_1 e_2 ... e_N>. Site 1 is the most significant bit of
/// the basis index.
class BasisLabel {
 public:
  /// Throws InvalidArgument unless bits is a non-empty string of '0'/'1'.
  explicit BasisLabel(std::string bits);

  const std::string& bits() const { return bits_; }
  int sites() const { return static_cast<int>(bits_.size()); }
  std::size_t index() const;

 private:
  std::string bits_;
};

/// -+i(|k><j| e^{i phi} + h.c.) + sum_{l != k, j} |l><l| in the product basis.
/// Throws SameLabel when k == j and SizeMismatch on unequal lengths.
CMatrix composite_pi(const BasisLabel& k, const BasisLabel& j, double phi,
                     Orientation orientation);

struct PiRealization {
  CMatrix unitary;
  /// max over basis states l outside {k, j} of sum_{m != l} |<m|U|l>|^2.
  /// Exactly zero for states H does not connect to anything.
  double leakage = 0.0;
  /// max entrywise |U - composite_pi| over the 2x2 (k, j) block.
  double block_distance = 0.0;
};

/// U = e^{-iHT} (over) or e^{+iHT} (under), compared with composite_pi(k, j,
/// phi, orientation). U is built per connected block of H.
PiRealization realize_pi_via_hamiltonian(const CMatrix& h, const BasisLabel& k,
                                         const BasisLabel& j, double duration,
                                         Orientation orientation,
                                         double phi = 0.0);

/// omega (X_a X_b + sign Y_a Y_b) / 4 on an n-site chain, sites 1-based,
/// sign = +1 or -1.
std::vector<PauliTerm> xy_coupling(int n_sites, int site_a, int site_b,
                                   double omega, int sign);

}  // namespace tribraid
