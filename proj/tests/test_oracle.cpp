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

#include "doctest.h"
#include "opqec/oracle.hpp"

using namespace opqec;

TEST_CASE("frame and tableau pipelines agree on the three-pair code") {
  const OnePartyCode code = OnePartyCode::lift(ClassicalCode::repetition3());
  RandomStream rng(2024);
  const EquivalenceReport report = oracle_equivalence(code, 200, rng);
  CHECK(report.trials == 200);
  CHECK(report.syndrome_mismatches == 0);
  CHECK(report.label_mismatches == 0);
  CHECK(report.readout_mismatches == 0);
  CHECK(report.all_match());
}

TEST_CASE("frame and tableau pipelines agree on the seven-pair code") {
  const OnePartyCode code = OnePartyCode::lift(ClassicalCode::hamming7());
  RandomStream rng(2025);
  CHECK(oracle_equivalence(code, 50, rng).all_match());
}

TEST_CASE("tableau agrees with the forced state vector on random circuits") {
  RandomStream rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const Circuit c = random_clifford_circuit(3, 20, rng);
    CHECK(circuit_disagreements(c, rng) == 0);
  }
}

TEST_CASE("gate-level logical transforms reproduce the published table") {
  for (const auto& row : reference_logical_transforms_621()) {
    const LogicalTransformObservation obs =
        observe_logical_transform_621(row.op, row.state);
    CAPTURE(static_cast<int>(row.state));
    CHECK(obs.target == row.target);
    CHECK(obs.sign == row.sign);
  }
}
