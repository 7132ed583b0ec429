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

#include "opqec/one_party.hpp"

#include <stdexcept>
#include <utility>

namespace opqec {

OnePartyCode::OnePartyCode(ClassicalCode base) : base_(std::move(base)) {
  const BitMatrix& pchk = base_.parity_check();
  const std::size_t n = base_.n();
  stab_z_.reserve(pchk.rows());
  stab_x_.reserve(pchk.rows());
  for (std::size_t r = 0; r < pchk.rows(); ++r) {
    PauliString sz(2 * n);
    PauliString sx(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      if (!pchk.get(r, j)) continue;
      sz.ops[2 * j] = kPauliZ;
      sz.ops[2 * j + 1] = kPauliZ;
      sx.ops[2 * j] = kPauliX;
      sx.ops[2 * j + 1] = kPauliX;
    }
    stab_z_.push_back(std::move(sz));
    stab_x_.push_back(std::move(sx));
  }

  const BitMatrix& gen = base_.generator();
  const BitMatrix gram = gen.multiply(gen.transposed());
  readout_faithful_ = gram == BitMatrix::identity(gen.rows());
}

OnePartyCode OnePartyCode::lift(ClassicalCode base) {
  return OnePartyCode(std::move(base));
}

PauliString OnePartyCode::logical_op(LogicalOpKind kind, std::size_t i) const {
  if (i >= k()) throw std::out_of_range("logical index out of range");
  PauliString op(n_qubits());
  if (kind == LogicalOpKind::kIdentity) return op;
  const BitMatrix& gen = base_.generator();
  for (std::size_t j = 0; j < n_pairs(); ++j) {
    if (!gen.get(i, j)) continue;
    switch (kind) {
      case LogicalOpKind::kXOdd:
        op.ops[2 * j + 1] = kPauliX;
        break;
      case LogicalOpKind::kZOdd:
        op.ops[2 * j] = kPauliZ;
        op.ops[2 * j + 1] = kPauliZ;
        break;
      case LogicalOpKind::kXEven:
        op.ops[2 * j] = kPauliZ;
        break;
      case LogicalOpKind::kZEven:
        op.ops[2 * j] = kPauliX;
        op.ops[2 * j + 1] = kPauliX;
        break;
      case LogicalOpKind::kUEven:
        op.ops[2 * j] = kPauliX;
        break;
      case LogicalOpKind::kVEven:
        op.ops[2 * j] = kPauliY;
        break;
      case LogicalOpKind::kIdentity:
        break;
    }
  }
  return op;
}

SyndromeRecord OnePartyCode::extract_syndrome(
    const std::vector<PairError>& errors) const {
  if (errors.size() != n_pairs())
    throw std::invalid_argument("pair-error count != code pair count");
  BitVec r_bit(n_pairs()), r_phase(n_pairs());
  for (std::size_t j = 0; j < errors.size(); ++j) {
    r_bit[j] = errors[j].flips_zz() ? 1 : 0;
    r_phase[j] = errors[j].flips_xx() ? 1 : 0;
  }
  return SyndromeRecord{base_.syndrome(r_bit), base_.syndrome(r_phase)};
}

Correction OnePartyCode::decode_and_correct(const SyndromeRecord& synd) const {
  const DecodeResult bit = base_.decode(synd.z_synd);
  const DecodeResult phase = base_.decode(synd.x_synd);
  Correction c;
  c.flying.resize(n_pairs());
  for (std::size_t j = 0; j < n_pairs(); ++j)
    c.flying[j] = PauliOp{bit.error[j] != 0, phase.error[j] != 0};
  const bool ab = bit.status == DecodeStatus::kAmbiguous;
  const bool ap = phase.status == DecodeStatus::kAmbiguous;
  c.status = ab ? (ap ? CorrectionStatus::kAmbiguousBoth
                      : CorrectionStatus::kAmbiguousBit)
                : (ap ? CorrectionStatus::kAmbiguousPhase
                      : CorrectionStatus::kCorrected);
  return c;
}

std::vector<BellLabel> OnePartyCode::corrected_labels(
    const std::vector<PairError>& errors, const Correction& c) const {
  if (errors.size() != n_pairs() || c.flying.size() != n_pairs())
    throw std::invalid_argument("pair count mismatch");
  std::vector<BellLabel> labels(n_pairs());
  for (std::size_t j = 0; j < n_pairs(); ++j) {
    const PairError total = errors[j] * PairError{kPauliI, c.flying[j]};
    labels[j] = bell_after_error(total);
  }
  return labels;
}

LogicalState OnePartyCode::logical_labels(
    const std::vector<BellLabel>& physical) const {
  if (physical.size() != n_pairs())
    throw std::invalid_argument("label count != code pair count");
  const BitMatrix& gen = base_.generator();
  LogicalState state;
  state.labels.resize(k());
  for (std::size_t i = 0; i < k(); ++i) {
    bool zz = false, xx = false;
    for (std::size_t j = 0; j < n_pairs(); ++j) {
      if (!gen.get(i, j)) continue;
      zz ^= physical[j].zz_minus;
      xx ^= physical[j].xx_minus;
    }
    state.labels[i] = BellLabel{zz, xx};
  }
  return state;
}

LogicalState OnePartyCode::apply_logical(LogicalOpKind kind, std::size_t i,
                                         LogicalState state) const {
  if (i >= k()) throw std::out_of_range("logical index out of range");
  BellLabel& label = state.labels[i];
  switch (kind) {
    case LogicalOpKind::kXOdd:
    case LogicalOpKind::kUEven:
      label.zz_minus = !label.zz_minus;
      break;
    case LogicalOpKind::kXEven:
      label.xx_minus = !label.xx_minus;
      break;
    case LogicalOpKind::kVEven:
      label.zz_minus = !label.zz_minus;
      label.xx_minus = !label.xx_minus;
      break;
    case LogicalOpKind::kIdentity:
    case LogicalOpKind::kZOdd:
    case LogicalOpKind::kZEven:
      break;
  }
  return state;
}

LogicalOpKind encoding_op_for(bool m1, bool m2) {
  if (m1) return m2 ? LogicalOpKind::kVEven : LogicalOpKind::kUEven;
  return m2 ? LogicalOpKind::kXEven : LogicalOpKind::kIdentity;
}

BitVec logical_bell_readout(const LogicalState& state) {
  BitVec bits;
  bits.reserve(2 * state.labels.size());
  for (const BellLabel& label : state.labels) {
    bits.push_back(label.zz_minus ? 1 : 0);
    bits.push_back(label.xx_minus ? 1 : 0);
  }
  return bits;
}

std::vector<BellLabel> labels_of(const std::vector<PairError>& errors) {
  std::vector<BellLabel> labels(errors.size());
  for (std::size_t j = 0; j < errors.size(); ++j)
    labels[j] = bell_after_error(errors[j]);
  return labels;
}

PauliString to_pauli_string(const std::vector<PairError>& errors) {
  PauliString s(2 * errors.size());
  for (std::size_t j = 0; j < errors.size(); ++j) {
    s.ops[2 * j] = errors[j].home;
    s.ops[2 * j + 1] = errors[j].flying;
  }
  return s;
}

std::vector<PairError> pair_errors_of(const PauliString& s) {
  if (s.size() % 2 != 0)
    throw std::invalid_argument("Pauli string length must be even");
  std::vector<PairError> errors(s.size() / 2);
  for (std::size_t j = 0; j < errors.size(); ++j)
    errors[j] = PairError{s.ops[2 * j], s.ops[2 * j + 1]};
  return errors;
}

std::vector<PairError> simulate_concat_round(
    const std::vector<PairError>& physical, ConcatRoundStats* stats) {
  if (physical.size() % 3 != 0)
    throw std::invalid_argument("pair count must be divisible by 3");
  static const OnePartyCode six = OnePartyCode::lift(ClassicalCode::repetition3());
  std::vector<PairError> logical;
  logical.reserve(physical.size() / 3);
  std::vector<PairError> group(3);
  for (std::size_t g = 0; g < physical.size(); g += 3) {
    group.assign(physical.begin() + static_cast<std::ptrdiff_t>(g),
                 physical.begin() + static_cast<std::ptrdiff_t>(g + 3));
    const SyndromeRecord synd = six.extract_syndrome(group);
    const Correction c = six.decode_and_correct(synd);
    if (stats != nullptr) {
      ++stats->groups;
      if (!synd.trivial()) ++stats->nonzero_syndromes;
      ++stats->correction_statuses[static_cast<std::size_t>(c.status)];
    }
    const LogicalState residual =
        six.logical_labels(six.corrected_labels(group, c));
    const BellLabel label = residual.labels[0];
    logical.push_back(
        PairError{kPauliI, PauliOp{label.zz_minus, label.xx_minus}});
  }
  return logical;
}

std::vector<PairError> simulate_concat_round(
    const std::vector<PairError>& physical) {
  return simulate_concat_round(physical, nullptr);
}

double recursion_q(double q) {
  if (!(q >= 0.0 && q <= 1.0))
    throw std::invalid_argument("recursion_q argument outside [0,1]");
  return (3.0 - 2.0 * q) * q * q;
}

std::vector<double> iterate_recursion(const ConcatSchedule& schedule) {
  if (schedule.rounds < 1)
    throw std::invalid_argument("schedule needs at least one round");
  std::vector<double> rates;
  rates.reserve(schedule.rounds);
  double q = schedule.q0;
  for (std::size_t r = 0; r < schedule.rounds; ++r) {
    q = recursion_q(q);
    rates.push_back(q);
  }
  return rates;
}

const std::array<ReferenceSyndromeRow, 16>& reference_syndrome_table_621() {
  // Published outcomes in column order {X on pairs 01, X on pairs 12,
  // Z on pairs 01, Z on pairs 12}.  The flagged row prints outcomes
  // identical to the (bit 2, phase 2) row, which its own error class
  // cannot produce.
  static const std::array<ReferenceSyndromeRow, 16> kRows = {{
      {-1, -1, {+1, +1, +1, +1}, false},
      {2, -1, {+1, +1, +1, -1}, false},
      {0, -1, {+1, +1, -1, +1}, false},
      {1, -1, {+1, +1, -1, -1}, false},
      {-1, 2, {+1, -1, +1, +1}, false},
      {2, 2, {+1, -1, +1, -1}, false},
      {0, 2, {+1, -1, -1, +1}, false},
      {1, 2, {+1, -1, -1, -1}, false},
      {-1, 0, {-1, +1, +1, +1}, false},
      {2, 0, {-1, +1, +1, -1}, false},
      {0, 0, {-1, +1, -1, +1}, false},
      {1, 0, {-1, +1, -1, -1}, false},
      {-1, 1, {-1, -1, +1, +1}, false},
      {2, 1, {+1, -1, +1, -1}, true},
      {0, 1, {-1, -1, -1, +1}, false},
      {1, 1, {-1, -1, -1, -1}, false},
  }};
  return kRows;
}

std::array<int, 4> derived_syndrome_signs_621(int bit_pair, int phase_pair) {
  const auto covers = [](int support_lo, int pair) {
    return pair == support_lo || pair == support_lo + 1;
  };
  return {
      covers(0, phase_pair) ? -1 : +1,
      covers(1, phase_pair) ? -1 : +1,
      covers(0, bit_pair) ? -1 : +1,
      covers(1, bit_pair) ? -1 : +1,
  };
}

const std::array<ReferenceLogicalTransform, 16>&
reference_logical_transforms_621() {
  using K = LogicalOpKind;
  static const std::array<ReferenceLogicalTransform, 16> kRows = {{
      {0b00, K::kXOdd, 0b10, +1},
      {0b00, K::kZOdd, 0b00, +1},
      {0b00, K::kXEven, 0b01, +1},
      {0b00, K::kZEven, 0b00, +1},
      {0b01, K::kXOdd, 0b11, +1},
      {0b01, K::kZOdd, 0b01, +1},
      {0b01, K::kXEven, 0b00, +1},
      {0b01, K::kZEven, 0b01, -1},
      {0b10, K::kXOdd, 0b00, +1},
      {0b10, K::kZOdd, 0b10, -1},
      {0b10, K::kXEven, 0b11, +1},
      {0b10, K::kZEven, 0b10, +1},
      {0b11, K::kXOdd, 0b01, +1},
      {0b11, K::kZOdd, 0b11, -1},
      {0b11, K::kXEven, 0b10, +1},
      {0b11, K::kZEven, 0b11, -1},
  }};
  return kRows;
}

}  // namespace opqec
