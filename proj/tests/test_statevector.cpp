// Copyright 2026 The opqec Authors
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

#include <cmath>

#include "doctest.h"
#include "opqec/statevector.hpp"

using namespace opqec;

namespace {
constexpr double kTol = 1e-12;
}

TEST_CASE("matrix helpers") {
  CHECK(mat_approx_equal(mat_mul(kMatH, kMatH), kMatI));
  CHECK(mat_approx_equal(mat_mul(kMatS, kMatS), kMatZ));
  CHECK(mat_approx_equal(mat_mul(kMatS, kMatSdg), kMatI));
  CHECK(mat_equal_up_to_phase(mat_mul(kMatX, kMatZ), kMatY));
  CHECK_FALSE(mat_equal_up_to_phase(kMatX, kMatZ));
  // The axis-cycling Clifford: X -> Y -> Z -> X under conjugation.
  CHECK(mat_equal_up_to_phase(mat_conjugate(kMatAxisCycle, kMatX), kMatY));
  CHECK(mat_equal_up_to_phase(mat_conjugate(kMatAxisCycle, kMatY), kMatZ));
  CHECK(mat_equal_up_to_phase(mat_conjugate(kMatAxisCycle, kMatZ), kMatX));
  // H swaps X and Z.
  CHECK(mat_equal_up_to_phase(mat_conjugate(kMatH, kMatX), kMatZ));
}

TEST_CASE("basic state evolution") {
  Statevector psi(2);
  CHECK(psi.dim() == 4);
  CHECK(psi.amplitude(0) == Complex(1.0));
  psi.apply_1q(kMatH, 0);
  CHECK(std::abs(psi.amplitude(0) - 1.0 / std::sqrt(2.0)) < kTol);
  psi.apply_cnot(0, 1);
  // Now Phi+.
  CHECK(std::abs(psi.amplitude(0) - 1.0 / std::sqrt(2.0)) < kTol);
  CHECK(std::abs(psi.amplitude(3) - 1.0 / std::sqrt(2.0)) < kTol);
  CHECK(std::abs(psi.amplitude(1)) < kTol);
  CHECK(psi.norm() == doctest::Approx(1.0));
  CHECK(std::abs(psi.inner(Statevector::bell(false, false)) - 1.0) < kTol);
}

TEST_CASE("bell states are eigenstates of ZZ and XX with the label signs") {
  const PauliString zz = PauliString::from_str("ZZ");
  const PauliString xx = PauliString::from_str("XX");
  for (int zzm = 0; zzm < 2; ++zzm) {
    for (int xxm = 0; xxm < 2; ++xxm) {
      const Statevector b = Statevector::bell(zzm != 0, xxm != 0);
      const Complex ez = pauli_bracket(b, zz, b);
      const Complex ex = pauli_bracket(b, xx, b);
      CHECK(std::abs(ez - Complex(zzm ? -1.0 : 1.0)) < kTol);
      CHECK(std::abs(ex - Complex(xxm ? -1.0 : 1.0)) < kTol);
    }
  }
}

TEST_CASE("measurement probabilities and collapse") {
  Statevector psi(1);
  psi.apply_1q(kMatH, 0);
  CHECK(psi.prob_zero(0) == doctest::Approx(0.5));
  psi.collapse(0, true);
  CHECK(psi.prob_zero(0) == doctest::Approx(0.0));
  CHECK(psi.norm() == doctest::Approx(1.0));
}

TEST_CASE("pauli string application matches per-qubit application") {
  Statevector a = Statevector::bell(false, false);
  Statevector b = Statevector::bell(false, false);
  a.apply_pauli_string(PauliString::from_str("XZ"));
  b.apply_pauli(kPauliX, 0);
  b.apply_pauli(kPauliZ, 1);
  CHECK(std::abs(std::abs(a.inner(b)) - 1.0) < kTol);
}
