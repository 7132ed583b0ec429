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

#include "opqec/oracle.hpp"

#include <vector>

#include "opqec/bell.hpp"
#include "opqec/statevector.hpp"

namespace opqec {

namespace {

// Measures an observable that must be deterministic on the current state;
// a random outcome is recorded by the caller as a mismatch.
bool deterministic_minus(Tableau& tab, const PauliString& p, bool* random) {
  RandomStream unused(0);
  const MeasurementResult r = tab.measure(p, unused);
  if (r.was_random) *random = true;
  return r.outcome_minus;
}

}  // namespace

EquivalenceReport oracle_equivalence(const OnePartyCode& code,
                                     std::size_t trials, RandomStream& rng) {
  EquivalenceReport report;
  report.trials = trials;
  const std::size_t n = code.n_pairs();
  const std::size_t k = code.k();

  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<PairError> errors(n);
    for (auto& e : errors)
      e = PairError{kPaulis[rng.uniform_below(4)],
                    kPaulis[rng.uniform_below(4)]};
    BitVec message(2 * k);
    for (auto& bit : message) bit = rng.next_bool() ? 1 : 0;

    // Frame pipeline: encoding frames compose with the error frames, the
    // syndrome is decoded, and labels/readout follow from parities.
    std::vector<PairError> total = errors;
    std::vector<PauliString> encodings;
    for (std::size_t i = 0; i < k; ++i) {
      const LogicalOpKind op =
          encoding_op_for(message[2 * i] != 0, message[2 * i + 1] != 0);
      if (op == LogicalOpKind::kIdentity) continue;
      encodings.push_back(code.logical_op(op, i));
      const auto frames = pair_errors_of(encodings.back());
      for (std::size_t j = 0; j < n; ++j) total[j] *= frames[j];
    }
    const SyndromeRecord frame_synd = code.extract_syndrome(total);
    const Correction corr = code.decode_and_correct(frame_synd);
    const std::vector<BellLabel> frame_labels =
        code.corrected_labels(total, corr);
    const BitVec frame_readout =
        logical_bell_readout(code.logical_labels(frame_labels));

    // Tableau pipeline: same encoding and errors as gates, every observable
    // measured (all are deterministic on this state).
    Tableau tab = Tableau::bell_pairs(n);
    for (const auto& enc : encodings) tab.apply_pauli_string(enc);
    tab.apply_pauli_string(to_pauli_string(errors));

    bool anomaly = false;
    SyndromeRecord tab_synd;
    tab_synd.z_synd.resize(code.stab_z().size());
    tab_synd.x_synd.resize(code.stab_x().size());
    for (std::size_t i = 0; i < code.stab_z().size(); ++i)
      tab_synd.z_synd[i] =
          deterministic_minus(tab, code.stab_z()[i], &anomaly) ? 1 : 0;
    for (std::size_t i = 0; i < code.stab_x().size(); ++i)
      tab_synd.x_synd[i] =
          deterministic_minus(tab, code.stab_x()[i], &anomaly) ? 1 : 0;
    if (anomaly || !(tab_synd == frame_synd)) ++report.syndrome_mismatches;

    PauliString correction_string(2 * n);
    for (std::size_t j = 0; j < n; ++j)
      correction_string.ops[2 * j + 1] = corr.flying[j];
    tab.apply_pauli_string(correction_string);

    bool labels_equal = true;
    for (std::size_t j = 0; j < n; ++j) {
      PauliString zz(2 * n), xx(2 * n);
      zz.ops[2 * j] = kPauliZ;
      zz.ops[2 * j + 1] = kPauliZ;
      xx.ops[2 * j] = kPauliX;
      xx.ops[2 * j + 1] = kPauliX;
      const BellLabel observed{deterministic_minus(tab, zz, &anomaly),
                               deterministic_minus(tab, xx, &anomaly)};
      labels_equal = labels_equal && observed == frame_labels[j];
    }
    if (anomaly || !labels_equal) ++report.label_mismatches;

    BitVec tab_readout(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
      tab_readout[2 * i] =
          deterministic_minus(tab, code.logical_op(LogicalOpKind::kZOdd, i),
                              &anomaly)
              ? 1
              : 0;
      tab_readout[2 * i + 1] =
          deterministic_minus(tab, code.logical_op(LogicalOpKind::kZEven, i),
                              &anomaly)
              ? 1
              : 0;
    }
    if (anomaly || tab_readout != frame_readout) ++report.readout_mismatches;
  }
  return report;
}

std::size_t circuit_disagreements(const Circuit& c, RandomStream& rng) {
  Tableau tab(c.num_qubits);
  const std::vector<MeasurementResult> tab_results = run_circuit(c, tab, rng);

  std::vector<bool> forced(tab_results.size());
  for (std::size_t i = 0; i < tab_results.size(); ++i)
    forced[i] = tab_results[i].outcome_minus;

  Statevector psi(static_cast<int>(c.num_qubits));
  const std::vector<MeasurementResult> sv_results =
      run_circuit(c, psi, forced);

  std::size_t disagreements = 0;
  for (std::size_t i = 0; i < tab_results.size(); ++i) {
    if (tab_results[i].outcome_minus != sv_results[i].outcome_minus ||
        tab_results[i].was_random != sv_results[i].was_random)
      ++disagreements;
  }
  return disagreements;
}

LogicalTransformObservation observe_logical_transform_621(
    LogicalOpKind op, std::uint8_t state_bits) {
  const OnePartyCode code = OnePartyCode::lift(ClassicalCode::repetition3());
  const auto prep = [&](std::uint8_t bits) {
    PauliString p(code.n_qubits());
    if (bits & 2) p *= code.logical_op(LogicalOpKind::kXOdd, 0);
    if (bits & 1) p *= code.logical_op(LogicalOpKind::kXEven, 0);
    return p;
  };
  const PauliString o = code.logical_op(op, 0);
  const PauliString prep_state = prep(state_bits & 3);

  LogicalTransformObservation obs;

  // Image label, read off the gate-level state.
  Tableau tab = Tableau::bell_pairs(3);
  tab.apply_pauli_string(prep_state);
  tab.apply_pauli_string(o);
  bool anomaly = false;
  const bool zz =
      deterministic_minus(tab, code.logical_op(LogicalOpKind::kZOdd, 0),
                          &anomaly);
  const bool xx =
      deterministic_minus(tab, code.logical_op(LogicalOpKind::kZEven, 0),
                          &anomaly);
  if (anomaly) return obs;  // image is not an encoded basis state
  obs.target = static_cast<std::uint8_t>((zz ? 2 : 0) | (xx ? 1 : 0));

  // Sign: Q = P(target) * op * P(state) carries i^phase relative to its
  // phase-free string; the string stabilizes all-Phi+ up to a sign the
  // tableau measures deterministically.
  const PauliString prep_target = prep(obs.target);
  int phase = pauli_product_phase(o, prep_state);
  PauliString q = o * prep_state;
  phase = (phase + pauli_product_phase(prep_target, q)) % 4;
  q = prep_target * q;
  if (phase % 2 != 0) return obs;  // sign stays 0: product is not Hermitian

  bool minus = false;
  if (!q.is_identity()) {
    Tableau ref = Tableau::bell_pairs(3);
    bool random = false;
    minus = deterministic_minus(ref, q, &random);
    if (random) return obs;
  }
  obs.sign = (phase == 0 ? 1 : -1) * (minus ? -1 : 1);
  return obs;
}

}  // namespace opqec
