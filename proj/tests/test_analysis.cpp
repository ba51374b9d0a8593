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

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "tribraid/analysis.hpp"

using namespace tribraid;

namespace {

PureState psi0() { return PureState::from_dressed(oracle::psi0_weights(), base_frame()); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

std::vector<double> phase_samples(int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(2 * kPi * i / n);
  return out;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(a + (b - a) * i / (n - 1));
  return out;
}

// Input level values 1..m scaled so that level i has the i-th largest value.
std::vector<double> levels(int m) {
  std::vector<double> v;
  for (int i = 0; i < m; ++i) v.push_back(0.1 * (m - i));
  return v;
}

}  // namespace

TEST_CASE("BraidWord parse and label") {
  const BraidWord w = BraidWord::parse("12o 23u-12u");
  REQUIRE(w.size() == 3);
  CHECK(w.letters[0].label() == "12o");
  CHECK(w.letters[2].label() == "12u");
  CHECK(w.label() == "12o-23u-12u");
  CHECK(BraidWord::parse("").label() == "id");
  CHECK(BraidWord::parse("id").size() == 0);
  CHECK(code_of([] { BraidWord::parse("12o 44u"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("rank_relabel") {
  const std::vector<double> a{0.4, 0.3, 0.2}, b{0.2, 0.4, 0.3}, tied{0.3, 0.3, 0.4};
  CHECK(rank_relabel(a) == std::vector<int>{3, 2, 1});
  CHECK(rank_relabel(b) == std::vector<int>{1, 3, 2});
  CHECK(code_of([&] { rank_relabel(tied); }) == ErrorCode::TiedPopulations);
  const std::vector<double> near{0.3, 0.3 + 5e-7, 0.4};
  CHECK(code_of([&] { rank_relabel(near); }) == ErrorCode::TiedPopulations);
}

TEST_CASE("k_discrete on the two braid orders and the identity") {
  const std::vector<double> in{0.4, 0.3, 0.2};
  const std::vector<double> out54{0.3, 0.2, 0.4}, out72{0.2, 0.4, 0.3};
  const KValue k54 = k_discrete(in, out54);
  CHECK(k54.mode == KMode::discrete);
  CHECK(k54.exact == 54u);
  CHECK(k54.scores == std::vector<double>{2, 1, 3});
  CHECK(k_discrete(in, out72).exact == 72u);
  CHECK(k_discrete(in, in).exact == 12u);

  const std::vector<double> off{0.35, 0.25, 0.4}, twice{0.4, 0.4, 0.3};
  CHECK(code_of([&] { k_discrete(in, off); }) == ErrorCode::NotAPermutation);
  CHECK(code_of([&] { k_discrete(in, twice); }) == ErrorCode::NotAPermutation);
  const std::vector<double> short_out{0.4, 0.3};
  CHECK(code_of([&] { k_discrete(in, short_out); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("k_discrete agrees with exhaustive enumeration") {
  for (int m : {2, 3, 4, 5}) {
    const auto in = levels(m);
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<double> out;
      std::vector<int> scores;
      for (int slot = 0; slot < m; ++slot) {
        out.push_back(in[perm[slot]]);
        scores.push_back(m - perm[slot]);
      }
      CHECK(k_discrete(in, out).exact == oracle::k_product(scores));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("k_discrete injectivity by size") {
  // m = 3 separates all six orders. For m = 4 the score 4 = 2*2 lets distinct
  // orders share a product; the known collisions are pinned here.
  std::map<int, std::map<std::uint64_t, int>> counts;
  for (int m : {3, 4}) {
    const auto in = levels(m);
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<double> out;
      for (int slot = 0; slot < m; ++slot) out.push_back(in[perm[slot]]);
      ++counts[m][*k_discrete(in, out).exact];
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  CHECK(counts[3].size() == 6);
  CHECK(counts[4].size() == 20);
  std::set<std::uint64_t> shared;
  for (const auto& [k, n] : counts[4]) {
    if (n > 1) shared.insert(k);
  }
  CHECK(shared == std::set<std::uint64_t>{768, 2592, 3072, 10368});
}

TEST_CASE("k_continuous") {
  const std::vector<double> in{0.4, 0.3, 0.2};
  const std::vector<double> out54{0.3, 0.2, 0.4}, out72{0.2, 0.4, 0.3};
  CHECK(k_continuous(in, out54).value == doctest::Approx(54.0).epsilon(1e-14));
  CHECK(k_continuous(in, out72).value == doctest::Approx(72.0).epsilon(1e-14));
  CHECK(k_continuous(in, in).value == doctest::Approx(12.0).epsilon(1e-14));
  CHECK(k_continuous(in, in).mode == KMode::continuous);

  const std::vector<double> wide{0.9, 0.05, 0.05};
  const KValue clamped = k_continuous(in, wide);
  CHECK(clamped.scores == std::vector<double>{3, 1, 1});

  const std::vector<double> tied{0.3, 0.3, 0.2};
  CHECK(code_of([&] { k_continuous(tied, in); }) == ErrorCode::TiedPopulations);
}

TEST_CASE("k_continuous converges to k_discrete along a homotopy") {
  const std::vector<double> in{0.4, 0.3, 0.2};
  const std::vector<double> a{0.3, 0.2, 0.4}, b{0.2, 0.4, 0.3};
  double previous = k_continuous(in, a).value;
  double max_jump = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double s = i / 1000.0;
    std::vector<double> out(3);
    for (int j = 0; j < 3; ++j) out[j] = (1 - s) * a[j] + s * b[j];
    const double k = k_continuous(in, out).value;
    max_jump = std::max(max_jump, std::abs(k - previous));
    previous = k;
    if (i == 500) {
      // Midway value stays inside the range spanned by the discrete values.
      CHECK(k > 12.0);
      CHECK(k < 108.0);
    }
  }
  CHECK(previous == doctest::Approx(72.0).epsilon(1e-12));
  CHECK(max_jump < 0.5);

  for (double delta : {1e-2, 1e-4, 1e-6}) {
    std::vector<double> near = a;
    near[0] += delta;
    near[2] -= delta;
    CHECK(std::abs(k_continuous(in, near).value - 54.0) <= 1e3 * delta);
  }
}

TEST_CASE("k_classify picks the mode") {
  const std::vector<double> in{0.4, 0.3, 0.2};
  const std::vector<double> exact{0.3, 0.2, 0.4}, off{0.35, 0.25, 0.4};
  CHECK(k_classify(in, exact).mode == KMode::discrete);
  CHECK(k_classify(in, off).mode == KMode::continuous);
}

TEST_CASE("writhe") {
  CHECK(writhe(BraidWord::parse("12o")) == 1);
  CHECK(writhe(BraidWord::parse("12o 12u")) == 0);
  CHECK(writhe(BraidWord{}) == 0);

  std::multiset<int> values;
  for (int mask = 0; mask < 8; ++mask) {
    std::string text;
    for (int i = 0; i < 3; ++i) text += std::string(i % 2 ? "23" : "12") + ((mask >> i) & 1 ? "u " : "o ");
    values.insert(writhe(BraidWord::parse(text)));
  }
  CHECK(values == std::multiset<int>{3, 1, 1, 1, -1, -1, -1, -3});

  const BraidWord a = BraidWord::parse("12o 23u 23u"), b = BraidWord::parse("13o 12o");
  BraidWord ab = a;
  ab.letters.insert(ab.letters.end(), b.letters.begin(), b.letters.end());
  CHECK(writhe(ab) == writhe(a) + writhe(b));
  BraidWord flipped = a;
  for (auto& l : flipped.letters) l = l.reversed();
  CHECK(writhe(flipped) == -writhe(a));
}

TEST_CASE("build_schedule placement") {
  const BraidWord w = BraidWord::parse("12o 23u 12u");
  SchedulePolicy policy;
  policy.lead = 1.0;
  policy.gap = -1.0;
  policy.tail = 2.0;
  policy.phase_mask = {false, true, true};
  const Schedule s = build_schedule(w, 0.7, policy);
  REQUIRE(s.pulses.size() == 3);
  CHECK(s.pulses[0].start == 1.0);
  CHECK(s.pulses[1].start == doctest::Approx(kPi));
  CHECK(s.pulses[2].start == doctest::Approx(2 * kPi - 1.0));
  CHECK(s.total_time == doctest::Approx(3 * kPi - 1.0 + 2.0));
  CHECK(s.pulses[0].letter.phase() == 0.0);
  CHECK(s.pulses[1].letter.phase() == 0.7);

  policy.gap = -4.0;
  CHECK(code_of([&] { build_schedule(w, 0.0, policy); }) == ErrorCode::InvalidArgument);
  policy.gap = 0.0;
  policy.phase_mask = {true};
  CHECK(code_of([&] { build_schedule(w, 0.0, policy); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("phase_scan basic responses") {
  const auto phis = phase_samples(16);
  for (const auto& f : phase_scan(BraidWord{}, phis, psi0()).values) {
    CHECK(std::abs(f - Complex(1.0)) <= 1e-12);
  }
  for (const auto& f : phase_scan(BraidWord::parse("12o 12o"), phis, psi0()).values) {
    CHECK(std::abs(f - Complex(-0.4)) <= 1e-12);
  }
  const std::vector<double> unordered{0.0, 1.0, 0.5};
  CHECK(code_of([&] { phase_scan(BraidWord{}, unordered, psi0()); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("phase_scan separates the four three-letter words") {
  const auto phis = phase_samples(64);
  const char* words[] = {"12o 23u 12o", "12o 23o 12u", "12o 23u 12u", "12o 23o 12o"};
  std::vector<std::vector<Complex>> curves;
  for (const char* w : words) {
    curves.push_back(phase_scan(BraidWord::parse(w), phis, psi0()).values);
    for (const auto& f : curves.back()) CHECK(std::abs(f) <= 1.0 + 1e-12);
  }
  double min_sep = 1e9;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) {
      double sep = 0.0;
      for (std::size_t i = 0; i < phis.size(); ++i) {
        sep = std::max(sep, std::abs(curves[a][i] - curves[b][i]));
      }
      min_sep = std::min(min_sep, sep);
    }
  }
  CHECK(min_sep > 0.05);

  // Oracle: the same products of ideal operators in the dressed basis.
  const auto w = oracle::psi0_weights();
  const CVector d = Eigen::Map<const CVector>(w.data(), 4);
  const double phi = phis[5];
  const CMatrix u = oracle::ideal_pi_dressed(1, 2, false, phi) * oracle::ideal_pi_dressed(2, 3, true, phi) *
                    oracle::ideal_pi_dressed(1, 2, true, phi);
  CHECK(std::abs(curves[1][5] - (u * d).dot(d)) <= 1e-10);
}

TEST_CASE("coherence_scan") {
  const auto phis = phase_samples(32);
  const auto c = oracle::psi0_weights();
  const BraidWord w = BraidWord::parse("12o 23u");

  SchedulePolicy sequential;
  sequential.lead = kPi;
  sequential.gap = kPi;
  sequential.tail = kPi;
  for (double eta : {0.0, 0.5, 1.0}) {
    const auto scan = coherence_scan(w, eta, phis, c, sequential);
    for (double p2p : scan.peak_to_peak) CHECK(p2p <= 1e-8);
  }

  SchedulePolicy overlap = sequential;
  overlap.gap = -kPi / 2;
  overlap.phase_mask = {false, true};
  double previous = -1.0;
  for (double eta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const auto scan = coherence_scan(w, eta, phis, c, overlap);
    if (eta == 0.0) {
      for (double p2p : scan.peak_to_peak) CHECK(p2p <= 1e-8);
    }
    CHECK(scan.peak_to_peak[1] >= previous);
    previous = scan.peak_to_peak[1];
    double total = 0.0;
    for (double p : scan.curve.values[3]) total += p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
  CHECK(previous > 0.05);
  CHECK(code_of([&] { coherence_scan(w, 1.5, phis, c, overlap); }) == ErrorCode::EtaOutOfRange);
}

TEST_CASE("breaking_probe") {
  const BraidWord a = BraidWord::parse("12o 23u 12u"), b = BraidWord::parse("12o 23u 12o");
  BraidWord ap = a, bp = b;
  for (auto& l : ap.letters) l = l.with_phase(kPi / 2);
  for (auto& l : bp.letters) l = l.with_phase(kPi / 2);

  // omega_g = 0 is the unbroken braid.
  const DressedFrame f = base_frame();
  CMatrix ideal = CMatrix::Identity(4, 4);
  for (const auto& l : ap.letters) ideal = ideal_pi(l, f) * ideal;
  CHECK(frobenius_distance(breaking_unitary(ap, 0.0), ideal) <= 1e-10);

  // Oracle: Taylor propagators of H_g +- H_kj written out by hand.
  CMatrix hg = CMatrix::Zero(4, 4);
  hg(0, 1) = hg(1, 0) = -1.0;
  hg(2, 2) = hg(3, 3) = -1.0;
  CMatrix u = CMatrix::Identity(4, 4);
  for (const auto& l : bp.letters) {
    const double s = l.orientation() == Orientation::over ? 1.0 : -1.0;
    u = oracle::propagator(hg + s * pulse_hamiltonian(l, 1.0, f), kPi) * u;
  }
  CHECK(frobenius_distance(breaking_unitary(bp, 1.0), u) <= 1e-10);

  const auto pa = breaking_probe(ap, 1.0, psi0());
  const auto pb = breaking_probe(bp, 1.0, psi0());
  double diff = 0.0;
  for (int i = 0; i < 3; ++i) diff = std::max(diff, std::abs(pa[i] - pb[i]));
  CHECK(diff > 0.05);
  for (const auto& p : {pa, pb}) {
    CHECK(std::abs(p[3] - 0.1) <= 1e-10);
    CHECK(std::abs(p[0] + p[1] + p[2] - 0.9) <= 1e-10);
  }
  for (double g : {0.3, 2.0, 5.0}) {
    CHECK(unitarity_defect(breaking_unitary(ap, g)) <= 1e-12);
  }

  CHECK(code_of([] { breaking_unitary(BraidWord::parse("13o"), 1.0); }) == ErrorCode::UnsupportedPair);
  CHECK(code_of([&] { breaking_unitary(a, -1.0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("transition_scan plateaus") {
  TransitionScanSpec spec;
  std::vector<double> dts = linspace(kPi + 0.05, 3 * kPi, 12);
  for (const auto& k : transition_scan(spec, dts, psi0()).values) {
    CHECK(k.mode == KMode::discrete);
    CHECK(k.exact == 54u);
  }
  dts = linspace(-3 * kPi, -kPi - 0.05, 12);
  for (const auto& k : transition_scan(spec, dts, psi0()).values) {
    CHECK(k.mode == KMode::discrete);
    CHECK(k.exact == 72u);
  }
  // Plateaus are unaffected by where the pair sits in time.
  spec.lead = 4.3;
  spec.tail = 0.2;
  const std::vector<double> two{-2 * kPi, 2 * kPi};
  const auto moved = transition_scan(spec, two, psi0()).values;
  CHECK(moved[0].exact == 72u);
  CHECK(moved[1].exact == 54u);
}

TEST_CASE("transition_scan is continuous through the overlap region") {
  const TransitionScanSpec spec;
  const auto max_jump = [&](int n) {
    const auto curve = transition_scan(spec, linspace(-kPi + 0.01, kPi - 0.01, n), psi0());
    double jump = 0.0;
    for (std::size_t i = 1; i < curve.values.size(); ++i) {
      jump = std::max(jump, std::abs(curve.values[i].value - curve.values[i - 1].value));
    }
    return jump;
  };
  const double coarse = max_jump(101);
  const double fine = max_jump(401);
  CHECK(fine < 0.5 * coarse);

  const auto curve = transition_scan(spec, linspace(-kPi + 0.01, kPi - 0.01, 101), psi0());
  double lo = 1e9, hi = -1e9;
  for (const auto& k : curve.values) {
    lo = std::min(lo, k.value);
    hi = std::max(hi, k.value);
  }
  CHECK(hi - lo > 1.0);
}
