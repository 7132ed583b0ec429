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

#ifndef OPQEC_PROTOCOLS_HPP_
#define OPQEC_PROTOCOLS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opqec/channel.hpp"
#include "opqec/one_party.hpp"
#include "opqec/rng.hpp"

namespace opqec {

// Executable rounds of the three entanglement-based protocols: dense coding
// over a lifted code, direct messaging through check-pair sampling, and the
// coded variant that replaces most of the sampling with error correction.
// Every run is a single sequential state machine over Pauli frames; public
// classical announcements are appended to the outcome transcript as one JSON
// object per line.

/// Tolerable per-pair bit error rate of the purify-then-teleport comparator
/// under one-way classical communication.  Recorded for capacity-ordering
/// reports; the comparator itself is not simulated here.
inline constexpr double kEppComparatorBitErrorRate = 0.25;

/// Bit error rate ceiling of the CSS-code key-distribution comparator, also
/// recorded for reports only.
inline constexpr double kCssComparatorBitErrorRate = 0.11;

/// Verdict of one observed check round.
struct CheckStats {
  std::size_t checks = 0;
  std::size_t mismatches = 0;
  double rate = 0.0;
  double standard_error = 0.0;  // binomial, sqrt(rate (1-rate) / checks)
  double threshold = 0.0;
  bool abort = false;

  bool operator==(const CheckStats&) const = default;
};

/// Rate estimate with binomial standard error; abort iff rate > threshold.
/// Requires checks >= 1, mismatches <= checks, threshold in [0,1].
CheckStats estimate_check_error(std::size_t mismatches, std::size_t checks,
                                double threshold);

/// Abort cutoff `sigmas` binomial standard deviations above the mismatch
/// rate an honest channel is expected to produce, capped at 1.
double suggested_check_threshold(double expected_rate, std::size_t checks,
                                 double sigmas = 3.0);

/// Sufficient conditions for a [[2n,2k,t]] block to deliver exactly through
/// a memoryless channel on the transmitted qubits.
struct SuccessCondition {
  double correction_ratio = 0.0;  // t/n of the code
  /// Expected per-type error counts fit in the correction radius:
  /// t/n >= px+py (bit components) and t/n >= pz+py (phase components).
  bool guaranteed_regime = false;
  /// Pair fidelity clears F >= 1 - (3/2)(t/n); reaches F = 0.25 as t/n -> 1/2.
  bool fidelity_gate = false;
};

SuccessCondition check_success_condition(const OnePartyCode& code,
                                         const PauliChannel& channel);

/// Everything a finished (or aborted) protocol run reports.
struct ProtocolOutcome {
  bool aborted = false;
  std::size_t abort_round = 0;  // 1-based check round that tripped; 0 if none
  BitVec delivered;             // empty when aborted
  bool success = false;         // delivered equals the configured message
  std::vector<CheckStats> check_rounds;
  std::size_t syndrome_extractions = 0;
  std::size_t nonzero_syndromes = 0;
  /// Indexed by CorrectionStatus.
  std::array<std::size_t, 4> correction_statuses{};
  /// One JSON object per public classical announcement, in order.
  std::vector<std::string> transcript;
};

/// Dense-coding round configuration.  The code must have faithful logical
/// readout (the receiver recovers message bits as label parities), which
/// holds for the repetition-3 lift.
struct DenseCodingConfig {
  OnePartyCode code;
  BitVec message;                // 2k bits; bits (2i, 2i+1) select pair i's op
  double initial_fidelity = 1.0; // shared-ensemble fidelity before the round
  PauliChannel channel;          // hits each transmitted qubit independently
  bool twirl = true;             // rotate the ensemble into Werner form first
  bool symmetrize = true;        // random per-qubit axis-cycle layer in transit
  bool permute_pairs = false;    // random transmission-order permutation
  /// When nonempty (length = pair count), these replace channel sampling as
  /// the per-pair transit errors: deterministic injection mode.
  std::vector<PauliOp> injected;
  std::uint64_t seed = 0;        // used by config-file-driven runs
};

/// One dense-coding round: impure ensemble -> twirl -> logical encoding of
/// the message two bits per pair -> rotated transmission through the channel
/// -> undo rotations -> syndrome correction -> Bell-basis readout.
ProtocolOutcome run_dense_coding(const DenseCodingConfig& cfg,
                                 RandomStream& rng);

/// Exact dense-coding success probability for the 3-pair lift under an
/// i.i.d. channel on the transmitted qubits, by enumerating all 4^3 transit
/// patterns: success iff at most one bit-flip and at most one phase-flip
/// component across the three.
double dense_coding_success_exhaustive_621(const PauliChannel& channel);

enum class EavesdropperKind {
  kNone,
  /// Measures each phase-one transmitted qubit in the Z basis with the given
  /// probability and resends the outcome (equivalent to dephasing at half
  /// the intercept probability).
  kInterceptResend,
};

struct Eavesdropper {
  EavesdropperKind kind = EavesdropperKind::kNone;
  double intercept_probability = 0.0;  // per phase-one qubit
};

/// Direct-messaging configuration, shared by the uncoded baseline and the
/// coded variant.
struct QsdcConfig {
  /// The block count n: phase one transmits 3n pair halves; n of them are
  /// spent on the first check round.
  std::size_t n_blocks = 0;
  /// Uncoded baseline: n bits, one per surviving code pair.  Coded variant:
  /// one bit per top-level logical pair (k bits needing k * 3^rounds code
  /// pairs after purification).
  BitVec message;
  PauliChannel channel_phase1;
  PauliChannel channel_phase2;
  Eavesdropper eve;
  /// Abort cutoff shared by both check rounds.  Unset selects
  /// suggested_check_threshold over the honest expected rate per round.
  std::optional<double> check_threshold;
  /// Coded variant only: per-type residual error rate on purified pairs and
  /// the fraction of pairs the purification stage keeps.
  double epp_residual = 0.0;
  double epp_yield = 1.0;
  /// Coded variant only: concatenation depth of the phase-two code.
  std::size_t concat_rounds = 1;
  std::uint64_t seed = 0;
};

/// Uncoded two-phase messaging round: basis-masked pair distribution, first
/// check round (n of 3n), XZ encoding on the receiver's halves of the code
/// pairs, return transmission, second check round, Z-comparison readout.
ProtocolOutcome run_qsdc_noiseless(const QsdcConfig& cfg);

/// Coded variant: phase one as in the baseline, the purification stage
/// abstracted to (epp_yield, epp_residual) on its survivors, logical-basis
/// masking of the purified pairs, message encoded through the concatenated
/// 3-pair lift, and corrected Z-comparison readout.
ProtocolOutcome run_qsdc_one_party(const QsdcConfig& cfg);

}  // namespace opqec

#endif  // OPQEC_PROTOCOLS_HPP_
