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

#ifndef OPQEC_TABLEAU_HPP_
#define OPQEC_TABLEAU_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "opqec/gf2.hpp"
#include "opqec/pauli.hpp"
#include "opqec/rng.hpp"

namespace opqec {

struct MeasurementResult {
  /// True when the outcome was -1.
  bool outcome_minus = false;
  /// True when the operator anticommuted with the stabilizer group and the
  /// outcome was a coin flip (or was forced).
  bool was_random = false;
};

/// Sign-tracking stabilizer tableau with destabilizer bookkeeping.
///
/// This is the project's brute-force oracle: it is deliberately plain
/// (byte-per-bit rows, explicit i^phase arithmetic) so that it is easy to
/// audit, and it self-checks its own phase algebra during deterministic
/// measurements.  Rows store operators as i^phase * prod_q X^x Z^z with
/// phase kept modulo 4; a row with m Y factors therefore has
/// phase == m (mod 2), and its sign is + exactly when (phase - m) % 4 == 0.
class Tableau {
 public:
  /// |0...0>: stabilizers +Z_q, destabilizers +X_q.
  explicit Tableau(std::size_t num_qubits);

  /// Product of Phi+ pairs on qubits (2j, 2j+1): stabilizers
  /// {+X X, +Z Z} per pair.
  static Tableau bell_pairs(std::size_t n_pairs);

  std::size_t num_qubits() const { return n_; }

  void h(std::size_t q);
  void s(std::size_t q);
  /// Conjugation by the axis-cycling Clifford: X -> Y -> Z -> X.
  void axis_cycle(std::size_t q);
  void x(std::size_t q);
  void y(std::size_t q);
  void z(std::size_t q);
  void cnot(std::size_t control, std::size_t target);
  void cz(std::size_t a, std::size_t b);
  void apply_pauli(PauliOp p, std::size_t q);
  /// Applies a Pauli string across all qubits (length must equal
  /// num_qubits()).
  void apply_pauli_string(const PauliString& p);

  /// Measures the +1/-1 observable given by a positive Pauli string.
  /// Deterministic outcomes leave the state unchanged; anticommuting
  /// observables collapse the state and consume one coin from `rng`.
  MeasurementResult measure(const PauliString& p, RandomStream& rng);

  /// Like measure(), but a would-be random outcome is forced to
  /// `outcome_minus` instead of drawing a coin.  A deterministic outcome
  /// must agree with the forced value or std::logic_error is thrown.
  MeasurementResult measure_forced(const PauliString& p, bool outcome_minus);

  /// Z-basis measurement of one qubit.
  MeasurementResult measure_z(std::size_t q, RandomStream& rng);

  /// Stabilizer generator i as (sign, positive Pauli string).
  std::pair<int, PauliString> stabilizer(std::size_t i) const;
  std::pair<int, PauliString> destabilizer(std::size_t i) const;

  /// Stabilizer generator i rendered like "+XXII" / "-ZZZZ".
  std::string stabilizer_str(std::size_t i) const;

  /// Verifies row validity, pairwise commutation, and the symplectic
  /// destabilizer/stabilizer pairing.
  bool check_invariants() const;

  /// When on, check_invariants() runs after every gate and measurement and
  /// failures throw std::logic_error.  Meant for tests; O(n^3) per gate.
  void set_paranoid(bool on) { paranoid_ = on; }

 private:
  struct Row {
    BitVec x;
    BitVec z;
    int phase = 0;  // exponent of i, mod 4
  };

  static bool anticommutes(const Row& row, const PauliString& p);
  static void multiply_into(Row& left, const Row& right);
  Row row_of(const PauliString& p, bool outcome_minus) const;
  std::pair<int, PauliString> row_as_pauli(const Row& row) const;
  MeasurementResult measure_impl(const PauliString& p, RandomStream* rng,
                                 bool forced_minus);
  void after_gate();

  std::size_t n_;
  std::vector<Row> destab_;
  std::vector<Row> stab_;
  bool paranoid_ = false;
};

}  // namespace opqec

#endif  // OPQEC_TABLEAU_HPP_
