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

#ifndef OPQEC_ORACLE_HPP_
#define OPQEC_ORACLE_HPP_

#include <cstddef>
#include <cstdint>

#include "opqec/circuit.hpp"
#include "opqec/one_party.hpp"
#include "opqec/rng.hpp"
#include "opqec/tableau.hpp"

namespace opqec {

/// Tally from running the Pauli-frame pipeline and the tableau pipeline on
/// identical random instances.  The validation chain is
/// state vector -> tableau -> Pauli frame: the frame is the fast path, the
/// tableau the trusted gate-level reference.
struct EquivalenceReport {
  std::size_t trials = 0;
  std::size_t syndrome_mismatches = 0;
  std::size_t label_mismatches = 0;
  std::size_t readout_mismatches = 0;

  bool all_match() const {
    return syndrome_mismatches == 0 && label_mismatches == 0 &&
           readout_mismatches == 0;
  }
};

/// Each trial draws a uniformly random Pauli on both halves of every pair
/// and a uniformly random logical message, then compares the frame pipeline
/// (extract_syndrome / decode_and_correct / corrected_labels / readout
/// parities) against gate-level tableau measurements of the same
/// observables.
EquivalenceReport oracle_equivalence(const OnePartyCode& code,
                                     std::size_t trials, RandomStream& rng);

/// Runs `c` on a fresh tableau (coins from `rng`), replays it on a fresh
/// dense state vector with the tableau's outcomes forced, and returns the
/// number of measurement positions whose outcome or randomness
/// classification disagree.
std::size_t circuit_disagreements(const Circuit& c, RandomStream& rng);

/// What a logical operator does to a canonical encoded basis state of the
/// 3-pair lifted code, observed entirely at the gate level.
struct LogicalTransformObservation {
  std::uint8_t target = 0;  // label bits of the image state (ZZ bit high)
  int sign = 0;             // +1 or -1; 0 flags a non-basis-state image
};

/// Prepares |state> on the tableau with the canonical preparation string
/// (X on flying halves for the ZZ bit, Z on home halves for the XX bit),
/// applies `op`, and reads the image label from the logical pair
/// observables.  The sign comes from exact Pauli product phases: with
/// P(b) the preparation string, P(target) * op * P(state) stabilizes the
/// all-Phi+ state up to sign, and that sign times the accumulated product
/// phase is <target| op |state>.
LogicalTransformObservation observe_logical_transform_621(
    LogicalOpKind op, std::uint8_t state_bits);

}  // namespace opqec

#endif  // OPQEC_ORACLE_HPP_
