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

#include <string>
#include <stdexcept>

#include "doctest.h"
#include "opqec/classical_code.hpp"
#include "opqec/errors.hpp"
#include "opqec/rng.hpp"

using namespace opqec;

namespace {
const std::string kDataDir = OPQEC_TEST_DATA_DIR;
}

TEST_CASE("repetition code corrects every single bit flip") {
  const ClassicalCode code = ClassicalCode::repetition3();
  CHECK(code.n() == 3);
  CHECK(code.k() == 1);
  CHECK(code.t() == 1);
  CHECK(code.encode(BitVec{1}) == BitVec{1, 1, 1});
  CHECK(code.encode(BitVec{0}) == BitVec{0, 0, 0});
  CHECK(code.message_of(BitVec{1, 1, 1}) == BitVec{1});
  for (std::size_t i = 0; i < 3; ++i) {
    BitVec e(3, 0);
    e[i] = 1;
    const DecodeResult r = code.decode(code.syndrome(e));
    CHECK(r.error == e);
    CHECK(r.status == DecodeStatus::kCorrected);
  }
}

TEST_CASE("repetition code silently miscorrects double errors") {
  const ClassicalCode code = ClassicalCode::repetition3();
  // A double flip shares its syndrome with the complementary single flip;
  // the decoder returns the lighter pattern and cannot tell them apart.
  const BitVec e{1, 1, 0};
  const DecodeResult r = code.decode(code.syndrome(e));
  CHECK(r.error == BitVec{0, 0, 1});
  CHECK(r.status == DecodeStatus::kCorrected);
}

TEST_CASE("syndromes outside the radius are reported as ambiguous") {
  // Repetition over four bits corrects one flip; the pattern 1001 has no
  // weight-one explanation, so its leader is heavier than the radius.
  const ClassicalCode code("rep4",
                           BitMatrix::from_strings({"1100", "0110", "0011"}),
                           1);
  const DecodeResult r = code.decode(code.syndrome(BitVec{1, 0, 0, 1}));
  CHECK(bitvec_weight(r.error) == 2);
  CHECK(r.status == DecodeStatus::kAmbiguous);
}

TEST_CASE("declared radius is checked at construction") {
  CHECK_THROWS_AS(
      ClassicalCode("over", BitMatrix::from_strings({"110", "011"}), 2),
      std::invalid_argument);
}

TEST_CASE("hamming code decodes all single errors and round-trips messages") {
  const ClassicalCode code = ClassicalCode::hamming7();
  CHECK(code.n() == 7);
  CHECK(code.k() == 4);
  CHECK(code.t() == 1);
  for (std::size_t i = 0; i < 7; ++i) {
    BitVec e(7, 0);
    e[i] = 1;
    const DecodeResult r = code.decode(code.syndrome(e));
    CHECK(r.error == e);
    CHECK(r.status == DecodeStatus::kCorrected);
  }
  for (unsigned m = 0; m < 16; ++m) {
    BitVec msg(4);
    for (int b = 0; b < 4; ++b) msg[b] = (m >> b) & 1;
    const BitVec cw = code.encode(msg);
    CHECK(bitvec_weight(code.syndrome(cw)) == 0);
    CHECK(code.message_of(cw) == msg);
  }
}

TEST_CASE("decoder ties break toward the lexicographically least pattern") {
  // Parity check 1111: syndrome 1 is shared by all four single flips; the
  // leader must be 0001.
  const ClassicalCode code("parity4", BitMatrix::from_strings({"1111"}), 0);
  const DecodeResult r = code.decode(BitVec{1});
  CHECK(r.error == BitVec{0, 0, 0, 1});
}

TEST_CASE("code definition files load and cross-check") {
  const ClassicalCode code = load_code_definition(kDataDir + "/hamming7.json");
  CHECK(code.name() == "hamming7");
  CHECK(code.n() == 7);
  CHECK(code.k() == 4);
  CHECK(code.t() == 1);
  CHECK(code.parity_check() == ClassicalCode::hamming7().parity_check());
  CHECK_THROWS_AS(load_code_definition(kDataDir + "/bad_code.json"),
                  ConfigError);
  CHECK_THROWS_AS(load_code_definition(kDataDir + "/nope.json"), ConfigError);
  CHECK_THROWS_AS(load_code_definition(kDataDir + "/malformed.json"),
                  ConfigError);
}

TEST_CASE("random codes keep their promised radius") {
  RandomStream rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const ClassicalCode code = random_code(8, 3, rng);
    CHECK(code.n() == 8);
    CHECK(code.k() == 3);
    if (code.t() == 0) continue;
    for (std::size_t i = 0; i < code.n(); ++i) {
      BitVec e(code.n(), 0);
      e[i] = 1;
      const DecodeResult r = code.decode(code.syndrome(e));
      CHECK(r.error == e);
    }
  }
}

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == 1.0);
  CHECK(binary_entropy(0.25) == doctest::Approx(0.8112781244591328));
  CHECK(binary_entropy(0.3) == binary_entropy(0.7));
}

TEST_CASE("existence bound report") {
  const GvReport mid = gv_report(0.5, 0.0);
  CHECK(mid.slack == doctest::Approx(0.0));
  CHECK_FALSE(mid.feasible);

  const GvReport r = gv_report(0.1, 0.2);
  CHECK(r.rate == 0.2);
  CHECK(r.radius == 0.1);
  CHECK(r.slack == doctest::Approx(1.0 - binary_entropy(0.1) - 0.2));
  CHECK(r.feasible);

  // Any radius short of one half leaves positive room for some rate.
  for (double x : {0.01, 0.2, 0.4, 0.49, 0.499})
    CHECK(gv_report(x, 0.0).feasible);

  CHECK_THROWS_AS(gv_report(-0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(gv_report(0.1, 1.5), std::invalid_argument);
}
