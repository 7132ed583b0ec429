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

#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "opqec/pauli.hpp"
#include "opqec/rng.hpp"
#include "opqec/statevector.hpp"

using namespace opqec;

TEST_CASE("pauli product is componentwise xor") {
  CHECK(kPauliX * kPauliZ == kPauliY);
  CHECK(kPauliZ * kPauliX == kPauliY);
  CHECK(kPauliY * kPauliY == kPauliI);
  CHECK(kPauliX * kPauliI == kPauliX);
  for (PauliOp p : kPaulis) CHECK((p * p).is_identity());
}

TEST_CASE("pauli commutation") {
  CHECK(kPauliX.commutes_with(kPauliX));
  CHECK(kPauliI.commutes_with(kPauliY));
  CHECK_FALSE(kPauliX.commutes_with(kPauliZ));
  CHECK_FALSE(kPauliX.commutes_with(kPauliY));
  CHECK_FALSE(kPauliY.commutes_with(kPauliZ));
}

TEST_CASE("pauli letters and index order") {
  CHECK(kPauliI.index() == 0);
  CHECK(kPauliX.index() == 1);
  CHECK(kPauliZ.index() == 2);
  CHECK(kPauliY.index() == 3);
  for (int i = 0; i < 4; ++i) CHECK(kPaulis[i].index() == i);
  for (char c : {'I', 'X', 'Z', 'Y'})
    CHECK(PauliOp::from_letter(c).letter() == c);
  CHECK_THROWS_AS(PauliOp::from_letter('Q'), std::invalid_argument);
}

TEST_CASE("pauli string basics") {
  const PauliString s = PauliString::from_str("IXZY");
  CHECK(s.size() == 4);
  CHECK(s.weight() == 3);
  CHECK(s.str() == "IXZY");
  CHECK((s * s).is_identity());
  CHECK(PauliString::from_str("XXII") * PauliString::from_str("IZZI") ==
        PauliString::from_str("XYZI"));
}

TEST_CASE("string commutation counts anticommuting sites mod 2") {
  CHECK(commutes(PauliString::from_str("XX"), PauliString::from_str("ZZ")));
  CHECK_FALSE(commutes(PauliString::from_str("XI"), PauliString::from_str("ZI")));
  CHECK(commutes(PauliString::from_str("XYZ"), PauliString::from_str("XYZ")));
  CHECK_THROWS_AS(commutes(PauliString::from_str("X"), PauliString::from_str("XX")),
                  std::invalid_argument);
}

TEST_CASE("product phase matches explicit 2x2 matrices") {
  // i^phase * matrix(a*b) must equal matrix(a) * matrix(b) for all pairs.
  const Complex im(0.0, 1.0);
  for (PauliOp a : kPaulis) {
    for (PauliOp b : kPaulis) {
      PauliString sa(1), sb(1);
      sa.ops[0] = a;
      sb.ops[0] = b;
      const int phase = pauli_product_phase(sa, sb);
      Complex factor = 1.0;
      for (int i = 0; i < phase; ++i) factor *= im;
      const Mat2 lhs = mat_mul(pauli_matrix(a), pauli_matrix(b));
      const Mat2 rhs = mat_scale(factor, pauli_matrix(a * b));
      CHECK(mat_approx_equal(lhs, rhs));
    }
  }
}

TEST_CASE("product phase spot values") {
  auto phase1 = [](char a, char b) {
    return pauli_product_phase(PauliString::from_str(std::string(1, a)),
                               PauliString::from_str(std::string(1, b)));
  };
  CHECK(phase1('X', 'Z') == 3);  // XZ = -iY
  CHECK(phase1('Z', 'X') == 1);  // ZX = +iY
  CHECK(phase1('X', 'Y') == 1);  // XY = +iZ
  CHECK(phase1('Y', 'X') == 3);
  CHECK(phase1('Y', 'Y') == 0);
  CHECK(phase1('I', 'Y') == 0);
}

TEST_CASE("product phase is associative over random strings") {
  RandomStream rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    PauliString a(6), b(6), c(6);
    for (std::size_t i = 0; i < 6; ++i) {
      a.ops[i] = kPaulis[rng.uniform_below(4)];
      b.ops[i] = kPaulis[rng.uniform_below(4)];
      c.ops[i] = kPaulis[rng.uniform_below(4)];
    }
    const int left = (pauli_product_phase(a, b) + pauli_product_phase(a * b, c)) % 4;
    const int right = (pauli_product_phase(b, c) + pauli_product_phase(a, b * c)) % 4;
    CHECK(left == right);
  }
}
