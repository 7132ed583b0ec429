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

#ifndef OPQEC_CIRCUIT_HPP_
#define OPQEC_CIRCUIT_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "opqec/bell.hpp"
#include "opqec/one_party.hpp"
#include "opqec/pauli.hpp"
#include "opqec/rng.hpp"
#include "opqec/statevector.hpp"
#include "opqec/tableau.hpp"

namespace opqec {

/// Clifford gate vocabulary.  Multi-qubit Pauli-product measurements are
/// not a primitive; they are realized by ancilla-coupled subcircuits ending
/// in kMeasureZ (see syndrome_circuit_621()).
enum class GateKind {
  kH,
  kPhase,      // S = diag(1, i)
  kAxisCycle,  // conjugation sends X -> Y -> Z -> X
  kPauli,
  kCnot,
  kCz,
  kMeasureZ,
};

struct CircuitStep {
  GateKind kind = GateKind::kH;
  std::size_t a = 0;          // acted-on qubit; control for kCnot
  std::size_t b = 0;          // target for kCnot, second qubit for kCz
  PauliOp pauli = kPauliI;    // payload for kPauli

  bool operator==(const CircuitStep&) const = default;
};

struct Circuit {
  std::size_t num_qubits = 0;
  std::vector<CircuitStep> steps;

  std::size_t num_measurements() const;

  bool operator==(const Circuit&) const = default;
};

/// Parses the line-oriented circuit format:
///
///   # comment
///   qubits 10
///   h 0
///   s 1
///   t 2          # axis-cycling rotation
///   x 3          # likewise y, z
///   cnot 0 4
///   cz 1 2
///   mz 0
///
/// The `qubits` directive must precede every gate.  Measurement results are
/// indexed by the program order of the mz lines.  Throws ConfigError on
/// malformed input; `source` names the input in error messages.
Circuit parse_circuit(std::istream& in, const std::string& source = "<input>");
Circuit parse_circuit_text(const std::string& text);
Circuit load_circuit(const std::string& path);

/// Canonical text form; parse_circuit_text round-trips it.
std::string circuit_text(const Circuit& c);

/// Runs on a tableau; random measurement outcomes consume coins from `rng`.
std::vector<MeasurementResult> run_circuit(const Circuit& c, Tableau& tab,
                                           RandomStream& rng);

/// Replay on a tableau with all would-be-random outcomes forced from
/// `forced` (one entry per mz, in program order; deterministic positions
/// must agree with the state or std::logic_error is thrown).
std::vector<MeasurementResult> run_circuit_forced(
    const Circuit& c, Tableau& tab, const std::vector<bool>& forced);

/// Runs on a dense state vector.  Each mz outcome is classified from the
/// Born probability: deterministic when it is 0 or 1, otherwise it must be
/// exactly 1/2 (the circuit is Clifford) and the entry of `forced` for that
/// measurement index decides the branch.  Disagreement between a forced
/// value and a deterministic outcome is reported, not thrown, so callers
/// can diff against a tableau run.
std::vector<MeasurementResult> run_circuit(const Circuit& c, Statevector& psi,
                                           const std::vector<bool>& forced);

/// Uniformly random circuit over the full gate vocabulary with `steps`
/// gates followed by a Z measurement of every qubit.
Circuit random_clifford_circuit(std::size_t num_qubits, std::size_t steps,
                                RandomStream& rng);

/// Number of ancillas (= stabilizer rows) in the 3-pair readout circuit.
inline constexpr std::size_t kSyndromeAncillas621 = 4;

/// Ancilla-coupled readout of the four stabilizers of the 3-pair lifted
/// code on 10 qubits: ancillas 0..3 measure, in order, XX on pairs {0,1},
/// XX on pairs {1,2}, ZZ on pairs {0,1}, ZZ on pairs {1,2}; the six data
/// qubits 4..9 hold the pairs with home halves at 4+2j and flying halves
/// at 5+2j.  X-type rows use an ancilla in the |+> basis controlling X
/// onto the data; Z-type rows accumulate data parities onto the ancilla.
Circuit syndrome_circuit_621();

/// Maps the four ancilla outcomes of syndrome_circuit_621() to a syndrome
/// record (outcome -1 <-> entry 1).
SyndromeRecord syndrome_from_outcomes_621(
    const std::vector<MeasurementResult>& outcomes);

/// Prepares three fresh pairs on the data qubits of a 10-qubit tableau,
/// injects the given pair errors, runs syndrome_circuit_621(), and returns
/// the resulting record.  All four outcomes are deterministic, so `rng` is
/// never consumed; it is threaded through for the general runner API.
SyndromeRecord measure_syndrome_circuit_621(
    const std::vector<PairError>& errors, RandomStream& rng);

}  // namespace opqec

#endif  // OPQEC_CIRCUIT_HPP_
