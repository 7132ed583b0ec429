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

#include <stdexcept>

#include "doctest.h"
#include "opqec/gf2.hpp"
#include "opqec/rng.hpp"

using namespace opqec;

TEST_CASE("bitvec helpers") {
  const BitVec v = bitvec_from_string("10110");
  CHECK(v == BitVec{1, 0, 1, 1, 0});
  CHECK(bitvec_to_string(v) == "10110");
  CHECK(bitvec_weight(v) == 3);
  BitVec w = bitvec_from_string("11000");
  xor_into(w, v);
  CHECK(bitvec_to_string(w) == "01110");
}

TEST_CASE("matrix construction and multiply") {
  const BitMatrix a = BitMatrix::from_strings({"110", "011"});
  CHECK(a.rows() == 2);
  CHECK(a.cols() == 3);
  CHECK(a.multiply(BitVec{1, 0, 0}) == BitVec{1, 0});
  CHECK(a.multiply(BitVec{1, 1, 1}) == BitVec{0, 0});
  const BitMatrix id = BitMatrix::identity(3);
  CHECK(a.multiply(id) == a);
  CHECK(a.transposed().transposed() == a);
  CHECK_THROWS_AS(BitMatrix::from_strings({"10", "1"}), std::invalid_argument);
}

TEST_CASE("rank and nullspace") {
  const BitMatrix a = BitMatrix::from_strings({"110", "011", "101"});
  CHECK(a.rank() == 2);  // rows sum to zero
  const BitMatrix ns = a.nullspace();
  CHECK(ns.rows() == 1);
  for (std::size_t r = 0; r < ns.rows(); ++r)
    CHECK(bitvec_weight(a.multiply(ns.row(r))) == 0);
  CHECK(BitMatrix::identity(4).rank() == 4);
  CHECK(BitMatrix::identity(4).nullspace().rows() == 0);
}

TEST_CASE("nullspace dimension is n minus rank for random matrices") {
  RandomStream rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 1 + rng.uniform_below(5);
    const std::size_t cols = 1 + rng.uniform_below(8);
    BitMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        a.set(r, c, rng.next_bool() ? 1 : 0);
    const BitMatrix ns = a.nullspace();
    CHECK(ns.rows() == cols - a.rank());
    for (std::size_t r = 0; r < ns.rows(); ++r)
      CHECK(bitvec_weight(a.multiply(ns.row(r))) == 0);
  }
}

TEST_CASE("right inverse") {
  const BitMatrix g = BitMatrix::from_strings({"1011", "0110"});
  const BitMatrix p = g.right_inverse();
  CHECK(g.multiply(p) == BitMatrix::identity(2));
  const BitMatrix deficient = BitMatrix::from_strings({"1010", "1010"});
  CHECK_THROWS_AS(deficient.right_inverse(), std::invalid_argument);
}
