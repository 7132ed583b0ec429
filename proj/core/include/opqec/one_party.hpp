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

#ifndef OPQEC_ONE_PARTY_HPP_
#define OPQEC_ONE_PARTY_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "opqec/bell.hpp"
#include "opqec/classical_code.hpp"
#include "opqec/pauli.hpp"

namespace opqec {

/// Operators acting on logical pair i of a lifted code.  Names follow the
/// printed convention where logical pair i occupies logical qubits 2i-1
/// (odd) and 2i (even); structurally they are products over the i-th
/// classical generator row's support:
///   kXOdd   X on the flying qubit of each supported pair
///   kZOdd   Z on both qubits of each supported pair
///   kXEven  Z on the home qubit of each supported pair
///   kZEven  X on both qubits of each supported pair
///   kUEven  X on the home qubit (dense-coding alternate; = kXOdd * kZEven)
///   kVEven  Y on the home qubit (dense-coding alternate)
enum class LogicalOpKind {
  kIdentity,
  kXOdd,
  kZOdd,
  kXEven,
  kZEven,
  kUEven,
  kVEven,
};

/// Bell label per logical pair; all-Phi+ is the logical zero.
struct LogicalState {
  std::vector<BellLabel> labels;

  static LogicalState zero(std::size_t k) {
    return LogicalState{std::vector<BellLabel>(k, kBellPhiPlus)};
  }

  bool operator==(const LogicalState&) const = default;
};

/// Measured stabilizer signs; entry 1 encodes outcome -1.
/// z_synd is determined solely by bit-flip (x) error components,
/// x_synd solely by phase-flip (z) components.
struct SyndromeRecord {
  BitVec z_synd;
  BitVec x_synd;

  /// True when every outcome is +1.
  bool trivial() const {
    for (auto v : z_synd)
      if (v) return false;
    for (auto v : x_synd)
      if (v) return false;
    return true;
  }

  bool operator==(const SyndromeRecord&) const = default;
};

enum class CorrectionStatus {
  kCorrected,
  kAmbiguousBit,
  kAmbiguousPhase,
  kAmbiguousBoth,
};

/// Pauli correction, always placed on flying qubits.
struct Correction {
  std::vector<PauliOp> flying;
  CorrectionStatus status = CorrectionStatus::kCorrected;
};

/// The lift of a classical [n, k, t] code to a code over n Bell pairs
/// (2n qubits) carrying k logical pairs and correcting t bit-flip and t
/// phase-flip errors per block.
///
/// Qubit layout: pair j occupies qubits 2j (home) and 2j+1 (flying), so in
/// 1-based printed indices the home qubits are odd and the flying even.
class OnePartyCode {
 public:
  static OnePartyCode lift(ClassicalCode base);

  const ClassicalCode& base() const { return base_; }
  std::size_t n_pairs() const { return base_.n(); }
  std::size_t n_qubits() const { return 2 * base_.n(); }
  std::size_t k() const { return base_.k(); }
  std::size_t t() const { return base_.t(); }

  /// Z-type stabilizers, one per parity-check row: ZZ on each supported pair.
  const std::vector<PauliString>& stab_z() const { return stab_z_; }
  /// X-type stabilizers: XX on each supported pair.
  const std::vector<PauliString>& stab_x() const { return stab_x_; }

  /// The named logical operator for logical pair index i (0-based).
  PauliString logical_op(LogicalOpKind kind, std::size_t i) const;

  /// True when the classical generator rows are pairwise orthogonal with
  /// odd weight, which makes per-index logical readout parities independent
  /// (holds for the repetition-3 lift; not achievable for every base code).
  bool logical_readout_faithful() const { return readout_faithful_; }

  /// Stabilizer outcomes for a pair-error pattern.  An outcome is -1 exactly
  /// when the stabilizer anticommutes with the total error, so it does not
  /// depend on which half of a pair an error component sits on.
  SyndromeRecord extract_syndrome(const std::vector<PairError>& errors) const;

  /// Decodes both syndrome halves with the base code's coset-leader decoder
  /// and returns X corrections at decoded bit-flip pairs and Z corrections
  /// at decoded phase-flip pairs.
  Correction decode_and_correct(const SyndromeRecord& synd) const;

  /// Bell labels of every pair after applying a correction to the errors.
  std::vector<BellLabel> corrected_labels(const std::vector<PairError>& errors,
                                          const Correction& c) const;

  /// Logical pair labels: parities of the physical labels over each
  /// classical generator row's support.
  LogicalState logical_labels(const std::vector<BellLabel>& physical) const;

  /// Label action of a logical operator: kXOdd and kUEven toggle the ZZ
  /// sign, kXEven toggles the XX sign, kVEven toggles both, and Z-type
  /// operators act on signs only (labels unchanged).
  LogicalState apply_logical(LogicalOpKind kind, std::size_t i,
                             LogicalState state) const;

 private:
  OnePartyCode(ClassicalCode base);

  ClassicalCode base_;
  std::vector<PauliString> stab_z_;
  std::vector<PauliString> stab_x_;
  bool readout_faithful_ = false;
};

/// The kind that encodes a 2-bit message chunk on one logical pair:
/// 00 -> identity, 01 -> kXEven, 10 -> kUEven, 11 -> kVEven.
LogicalOpKind encoding_op_for(bool m1, bool m2);

/// Two bits per logical pair, ZZ sign first: Phi+ -> 00, Phi- -> 01,
/// Psi+ -> 10, Psi- -> 11.
BitVec logical_bell_readout(const LogicalState& state);

/// Per-pair Bell labels after a pair-error pattern hits fresh Phi+ pairs.
std::vector<BellLabel> labels_of(const std::vector<PairError>& errors);

/// Conversions between pair-error vectors and flat Pauli strings over
/// 2 * n_pairs qubits (home at 2j, flying at 2j+1).
PauliString to_pauli_string(const std::vector<PairError>& errors);
std::vector<PairError> pair_errors_of(const PauliString& s);

/// Counters accumulated while running concatenation groups.
struct ConcatRoundStats {
  std::size_t groups = 0;
  std::size_t nonzero_syndromes = 0;
  /// Indexed by CorrectionStatus.
  std::array<std::size_t, 4> correction_statuses{};
};

/// One level of 3-pair concatenation: split into consecutive groups of 3,
/// run the lifted repetition-3 block on each, and return the residual
/// logical error of each group (a clean logical Pauli; exact for this base
/// code).  Input length must be divisible by 3.  When `stats` is non-null
/// the per-group counters are added into it.
std::vector<PairError> simulate_concat_round(
    const std::vector<PairError>& physical, ConcatRoundStats* stats);

std::vector<PairError> simulate_concat_round(
    const std::vector<PairError>& physical);

/// Per-type logical error rate after one round of 3-pair concatenation
/// with independent per-type physical rate q.
double recursion_q(double q);

struct ConcatSchedule {
  std::size_t rounds = 1;
  double q0 = 0.0;
};

/// The per-round rates [q_1 .. q_rounds] from iterating recursion_q.
std::vector<double> iterate_recursion(const ConcatSchedule& schedule);

/// Reference row of the published syndrome table for the 3-pair lift:
/// the error class (which pair carries the X component and which the Z
/// component; -1 for none) and the four printed outcomes in column order
/// X on pairs {0,1}, X on pairs {1,2}, Z on pairs {0,1}, Z on pairs {1,2}.
/// One published row is internally inconsistent (it duplicates another
/// row's outcomes); it is marked and its construction-implied outcomes are
/// exposed separately.
struct ReferenceSyndromeRow {
  int bit_pair;
  int phase_pair;
  std::array<int, 4> signs;
  bool published_inconsistent;
};

const std::array<ReferenceSyndromeRow, 16>& reference_syndrome_table_621();

/// Outcomes implied by the stabilizer construction for a given error class
/// (the corrected value for the inconsistent published row).
std::array<int, 4> derived_syndrome_signs_621(int bit_pair, int phase_pair);

/// Reference entry of the published logical-transform table for the 3-pair
/// lift: applying `op` (on logical index 0) to the encoded basis state with
/// label bits `state` yields the basis state `target` with the given sign.
struct ReferenceLogicalTransform {
  std::uint8_t state;
  LogicalOpKind op;
  std::uint8_t target;
  int sign;
};

const std::array<ReferenceLogicalTransform, 16>&
reference_logical_transforms_621();

}  // namespace opqec

#endif  // OPQEC_ONE_PARTY_HPP_
