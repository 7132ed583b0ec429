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

#include "opqec/circuit.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "opqec/errors.hpp"

namespace opqec {

namespace {

[[noreturn]] void parse_fail(const std::string& source, std::size_t line,
                             const std::string& message) {
  throw ConfigError(source + ":" + std::to_string(line) + ": " + message);
}

std::size_t parse_index(const std::string& source, std::size_t line,
                        const std::string& token, std::size_t num_qubits) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(token, &pos);
  } catch (const std::exception&) {
    parse_fail(source, line, "expected a qubit index, got '" + token + "'");
  }
  if (pos != token.size())
    parse_fail(source, line, "expected a qubit index, got '" + token + "'");
  if (value >= num_qubits)
    parse_fail(source, line,
               "qubit " + token + " out of range (circuit has " +
                   std::to_string(num_qubits) + ")");
  return static_cast<std::size_t>(value);
}

// Born probabilities in a Clifford circuit are exactly 0, 1/2, or 1; this
// only absorbs float rounding.
constexpr double kProbTol = 1e-9;

}  // namespace

std::size_t Circuit::num_measurements() const {
  std::size_t count = 0;
  for (const auto& step : steps)
    if (step.kind == GateKind::kMeasureZ) ++count;
  return count;
}

Circuit parse_circuit(std::istream& in, const std::string& source) {
  Circuit c;
  bool have_qubits = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string op;
    if (!(line >> op)) continue;
    std::vector<std::string> args;
    for (std::string t; line >> t;) args.push_back(t);

    if (op == "qubits") {
      if (have_qubits) parse_fail(source, line_no, "duplicate qubits line");
      if (args.size() != 1)
        parse_fail(source, line_no, "usage: qubits <count>");
      try {
        c.num_qubits = std::stoull(args[0]);
      } catch (const std::exception&) {
        c.num_qubits = 0;
      }
      if (c.num_qubits == 0)
        parse_fail(source, line_no, "qubit count must be positive");
      have_qubits = true;
      continue;
    }
    if (!have_qubits)
      parse_fail(source, line_no, "a qubits line must come before gates");

    CircuitStep step;
    if (op == "h" || op == "s" || op == "t" || op == "x" || op == "y" ||
        op == "z" || op == "mz") {
      if (args.size() != 1)
        parse_fail(source, line_no, "usage: " + op + " <qubit>");
      step.a = parse_index(source, line_no, args[0], c.num_qubits);
      if (op == "h") {
        step.kind = GateKind::kH;
      } else if (op == "s") {
        step.kind = GateKind::kPhase;
      } else if (op == "t") {
        step.kind = GateKind::kAxisCycle;
      } else if (op == "mz") {
        step.kind = GateKind::kMeasureZ;
      } else {
        step.kind = GateKind::kPauli;
        step.pauli = PauliOp::from_letter(static_cast<char>(op[0] - 'a' + 'A'));
      }
    } else if (op == "cnot" || op == "cz") {
      if (args.size() != 2)
        parse_fail(source, line_no, "usage: " + op + " <qubit> <qubit>");
      step.kind = op == "cnot" ? GateKind::kCnot : GateKind::kCz;
      step.a = parse_index(source, line_no, args[0], c.num_qubits);
      step.b = parse_index(source, line_no, args[1], c.num_qubits);
      if (step.a == step.b)
        parse_fail(source, line_no, op + " needs two distinct qubits");
    } else {
      parse_fail(source, line_no, "unknown operation '" + op + "'");
    }
    c.steps.push_back(step);
  }
  if (!have_qubits) parse_fail(source, line_no + 1, "missing qubits line");
  return c;
}

Circuit parse_circuit_text(const std::string& text) {
  std::istringstream in(text);
  return parse_circuit(in, "<string>");
}

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open circuit file: " + path);
  return parse_circuit(in, path);
}

std::string circuit_text(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.num_qubits << "\n";
  for (const auto& step : c.steps) {
    switch (step.kind) {
      case GateKind::kH: out << "h " << step.a; break;
      case GateKind::kPhase: out << "s " << step.a; break;
      case GateKind::kAxisCycle: out << "t " << step.a; break;
      case GateKind::kPauli: {
        char letter = step.pauli.letter();
        if (step.pauli.is_identity())
          throw std::invalid_argument("identity Pauli step has no text form");
        out << static_cast<char>(letter - 'A' + 'a') << " " << step.a;
        break;
      }
      case GateKind::kCnot: out << "cnot " << step.a << " " << step.b; break;
      case GateKind::kCz: out << "cz " << step.a << " " << step.b; break;
      case GateKind::kMeasureZ: out << "mz " << step.a; break;
    }
    out << "\n";
  }
  return out.str();
}

namespace {

template <typename MeasureFn>
std::vector<MeasurementResult> run_on_tableau(const Circuit& c, Tableau& tab,
                                              MeasureFn&& measure) {
  if (tab.num_qubits() != c.num_qubits)
    throw std::invalid_argument("tableau size does not match circuit");
  std::vector<MeasurementResult> results;
  results.reserve(c.num_measurements());
  for (const auto& step : c.steps) {
    switch (step.kind) {
      case GateKind::kH: tab.h(step.a); break;
      case GateKind::kPhase: tab.s(step.a); break;
      case GateKind::kAxisCycle: tab.axis_cycle(step.a); break;
      case GateKind::kPauli: tab.apply_pauli(step.pauli, step.a); break;
      case GateKind::kCnot: tab.cnot(step.a, step.b); break;
      case GateKind::kCz: tab.cz(step.a, step.b); break;
      case GateKind::kMeasureZ:
        results.push_back(measure(step.a, results.size()));
        break;
    }
  }
  return results;
}

}  // namespace

std::vector<MeasurementResult> run_circuit(const Circuit& c, Tableau& tab,
                                           RandomStream& rng) {
  return run_on_tableau(
      c, tab, [&](std::size_t q, std::size_t) { return tab.measure_z(q, rng); });
}

std::vector<MeasurementResult> run_circuit_forced(
    const Circuit& c, Tableau& tab, const std::vector<bool>& forced) {
  if (forced.size() != c.num_measurements())
    throw std::invalid_argument("forced outcome count != measurement count");
  return run_on_tableau(c, tab, [&](std::size_t q, std::size_t index) {
    PauliString p(tab.num_qubits());
    p.ops[q] = kPauliZ;
    return tab.measure_forced(p, forced[index]);
  });
}

std::vector<MeasurementResult> run_circuit(const Circuit& c, Statevector& psi,
                                           const std::vector<bool>& forced) {
  if (static_cast<std::size_t>(psi.num_qubits()) != c.num_qubits)
    throw std::invalid_argument("state size does not match circuit");
  if (forced.size() != c.num_measurements())
    throw std::invalid_argument("forced outcome count != measurement count");
  std::vector<MeasurementResult> results;
  results.reserve(forced.size());
  for (const auto& step : c.steps) {
    const int a = static_cast<int>(step.a);
    switch (step.kind) {
      case GateKind::kH: psi.apply_1q(kMatH, a); break;
      case GateKind::kPhase: psi.apply_1q(kMatS, a); break;
      case GateKind::kAxisCycle: psi.apply_1q(kMatAxisCycle, a); break;
      case GateKind::kPauli: psi.apply_pauli(step.pauli, a); break;
      case GateKind::kCnot: psi.apply_cnot(a, static_cast<int>(step.b)); break;
      case GateKind::kCz: psi.apply_cz(a, static_cast<int>(step.b)); break;
      case GateKind::kMeasureZ: {
        const double p0 = psi.prob_zero(a);
        MeasurementResult r;
        if (p0 > 1.0 - kProbTol) {
          r.outcome_minus = false;
        } else if (p0 < kProbTol) {
          r.outcome_minus = true;
        } else if (std::abs(p0 - 0.5) < kProbTol) {
          r.was_random = true;
          r.outcome_minus = forced[results.size()];
        } else {
          char buf[64];
          std::snprintf(buf, sizeof buf, "%.6f", p0);
          throw std::logic_error(
              std::string("non-Clifford measurement probability ") + buf);
        }
        psi.collapse(a, r.outcome_minus);
        results.push_back(r);
        break;
      }
    }
  }
  return results;
}

Circuit random_clifford_circuit(std::size_t num_qubits, std::size_t steps,
                                RandomStream& rng) {
  if (num_qubits == 0) throw std::invalid_argument("need at least one qubit");
  Circuit c;
  c.num_qubits = num_qubits;
  c.steps.reserve(steps + num_qubits);
  for (std::size_t i = 0; i < steps; ++i) {
    CircuitStep step;
    // Pick two-qubit gates more often so entanglement actually spreads.
    const std::uint64_t kind = rng.uniform_below(num_qubits > 1 ? 8 : 6);
    step.a = rng.uniform_below(num_qubits);
    switch (kind) {
      case 0: step.kind = GateKind::kH; break;
      case 1: step.kind = GateKind::kPhase; break;
      case 2: step.kind = GateKind::kAxisCycle; break;
      case 3:
        step.kind = GateKind::kPauli;
        step.pauli = kPaulis[1 + rng.uniform_below(3)];
        break;
      case 4: step.kind = GateKind::kMeasureZ; break;
      case 5: step.kind = GateKind::kH; break;
      default: {
        step.kind = kind == 6 ? GateKind::kCnot : GateKind::kCz;
        do {
          step.b = rng.uniform_below(num_qubits);
        } while (step.b == step.a);
        break;
      }
    }
    c.steps.push_back(step);
  }
  for (std::size_t q = 0; q < num_qubits; ++q)
    c.steps.push_back(CircuitStep{GateKind::kMeasureZ, q, 0, kPauliI});
  return c;
}

Circuit syndrome_circuit_621() {
  Circuit c;
  c.num_qubits = kSyndromeAncillas621 + 6;
  const auto pair_qubits = [](std::size_t pair) {
    return std::array<std::size_t, 2>{4 + 2 * pair, 5 + 2 * pair};
  };
  // X-type rows: ancilla in |+> controls X onto every qubit of both pairs.
  for (std::size_t row = 0; row < 2; ++row) {
    const std::size_t anc = row;
    c.steps.push_back({GateKind::kH, anc, 0, kPauliI});
    for (std::size_t pair : {row, row + 1})
      for (std::size_t q : pair_qubits(pair))
        c.steps.push_back({GateKind::kCnot, anc, q, kPauliI});
    c.steps.push_back({GateKind::kH, anc, 0, kPauliI});
    c.steps.push_back({GateKind::kMeasureZ, anc, 0, kPauliI});
  }
  // Z-type rows: data parities accumulate onto the ancilla.
  for (std::size_t row = 0; row < 2; ++row) {
    const std::size_t anc = 2 + row;
    for (std::size_t pair : {row, row + 1})
      for (std::size_t q : pair_qubits(pair))
        c.steps.push_back({GateKind::kCnot, q, anc, kPauliI});
    c.steps.push_back({GateKind::kMeasureZ, anc, 0, kPauliI});
  }
  return c;
}

SyndromeRecord syndrome_from_outcomes_621(
    const std::vector<MeasurementResult>& outcomes) {
  if (outcomes.size() != kSyndromeAncillas621)
    throw std::invalid_argument("expected four ancilla outcomes");
  SyndromeRecord rec;
  rec.x_synd = {outcomes[0].outcome_minus ? std::uint8_t{1} : std::uint8_t{0},
                outcomes[1].outcome_minus ? std::uint8_t{1} : std::uint8_t{0}};
  rec.z_synd = {outcomes[2].outcome_minus ? std::uint8_t{1} : std::uint8_t{0},
                outcomes[3].outcome_minus ? std::uint8_t{1} : std::uint8_t{0}};
  return rec;
}

SyndromeRecord measure_syndrome_circuit_621(
    const std::vector<PairError>& errors, RandomStream& rng) {
  if (errors.size() != 3)
    throw std::invalid_argument("the 3-pair readout circuit needs 3 pairs");
  Tableau tab(kSyndromeAncillas621 + 6);
  for (std::size_t j = 0; j < 3; ++j) {
    tab.h(4 + 2 * j);
    tab.cnot(4 + 2 * j, 5 + 2 * j);
    tab.apply_pauli(errors[j].home, 4 + 2 * j);
    tab.apply_pauli(errors[j].flying, 5 + 2 * j);
  }
  const Circuit circuit = syndrome_circuit_621();
  return syndrome_from_outcomes_621(run_circuit(circuit, tab, rng));
}

}  // namespace opqec
