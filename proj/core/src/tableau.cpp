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

#include "opqec/tableau.hpp"

#include <stdexcept>

namespace opqec {

Tableau::Tableau(std::size_t num_qubits) : n_(num_qubits) {
  if (n_ == 0) throw std::invalid_argument("tableau needs at least one qubit");
  destab_.resize(n_);
  stab_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    destab_[i].x.assign(n_, 0);
    destab_[i].z.assign(n_, 0);
    destab_[i].x[i] = 1;
    stab_[i].x.assign(n_, 0);
    stab_[i].z.assign(n_, 0);
    stab_[i].z[i] = 1;
  }
}

Tableau Tableau::bell_pairs(std::size_t n_pairs) {
  if (n_pairs == 0) throw std::invalid_argument("need at least one pair");
  Tableau t(2 * n_pairs);
  for (std::size_t j = 0; j < n_pairs; ++j) {
    t.h(2 * j);
    t.cnot(2 * j, 2 * j + 1);
  }
  return t;
}

void Tableau::h(std::size_t q) {
  for (auto rows : {&destab_, &stab_}) {
    for (Row& r : *rows) {
      r.phase = (r.phase + 2 * (r.x[q] & r.z[q])) % 4;
      std::swap(r.x[q], r.z[q]);
    }
  }
  after_gate();
}

void Tableau::s(std::size_t q) {
  for (auto rows : {&destab_, &stab_}) {
    for (Row& r : *rows) {
      r.phase = (r.phase + r.x[q]) % 4;
      r.z[q] ^= r.x[q];
    }
  }
  after_gate();
}

void Tableau::axis_cycle(std::size_t q) {
  for (auto rows : {&destab_, &stab_}) {
    for (Row& r : *rows) {
      r.phase = (r.phase + r.x[q] + 2 * (r.x[q] & r.z[q])) % 4;
      const std::uint8_t nx = r.x[q] ^ r.z[q];
      r.z[q] = r.x[q];
      r.x[q] = nx;
    }
  }
  after_gate();
}

void Tableau::x(std::size_t q) {
  for (auto rows : {&destab_, &stab_})
    for (Row& r : *rows) r.phase = (r.phase + 2 * r.z[q]) % 4;
  after_gate();
}

void Tableau::z(std::size_t q) {
  for (auto rows : {&destab_, &stab_})
    for (Row& r : *rows) r.phase = (r.phase + 2 * r.x[q]) % 4;
  after_gate();
}

void Tableau::y(std::size_t q) {
  for (auto rows : {&destab_, &stab_})
    for (Row& r : *rows) r.phase = (r.phase + 2 * (r.x[q] ^ r.z[q])) % 4;
  after_gate();
}

void Tableau::cnot(std::size_t control, std::size_t target) {
  if (control == target) throw std::invalid_argument("cnot needs two qubits");
  for (auto rows : {&destab_, &stab_}) {
    for (Row& r : *rows) {
      r.x[target] ^= r.x[control];
      r.z[control] ^= r.z[target];
    }
  }
  after_gate();
}

void Tableau::cz(std::size_t a, std::size_t b) {
  if (a == b) throw std::invalid_argument("cz needs two qubits");
  for (auto rows : {&destab_, &stab_}) {
    for (Row& r : *rows) {
      r.phase = (r.phase + 2 * (r.x[a] & r.x[b])) % 4;
      r.z[a] ^= r.x[b];
      r.z[b] ^= r.x[a];
    }
  }
  after_gate();
}

void Tableau::apply_pauli(PauliOp p, std::size_t q) {
  if (p == kPauliX) {
    x(q);
  } else if (p == kPauliZ) {
    z(q);
  } else if (p == kPauliY) {
    y(q);
  }
}

void Tableau::apply_pauli_string(const PauliString& p) {
  if (p.size() != n_)
    throw std::invalid_argument("Pauli string length != qubit count");
  for (std::size_t q = 0; q < n_; ++q) apply_pauli(p.ops[q], q);
}

bool Tableau::anticommutes(const Row& row, const PauliString& p) {
  int parity = 0;
  for (std::size_t q = 0; q < p.size(); ++q) {
    parity ^= (row.x[q] & (p.ops[q].z ? 1 : 0));
    parity ^= (row.z[q] & (p.ops[q].x ? 1 : 0));
  }
  return parity != 0;
}

void Tableau::multiply_into(Row& left, const Row& right) {
  int cross = 0;
  for (std::size_t q = 0; q < left.x.size(); ++q)
    cross += left.z[q] & right.x[q];
  left.phase = (left.phase + right.phase + 2 * cross) % 4;
  for (std::size_t q = 0; q < left.x.size(); ++q) {
    left.x[q] ^= right.x[q];
    left.z[q] ^= right.z[q];
  }
}

Tableau::Row Tableau::row_of(const PauliString& p, bool outcome_minus) const {
  Row r;
  r.x.assign(n_, 0);
  r.z.assign(n_, 0);
  int y_count = 0;
  for (std::size_t q = 0; q < n_; ++q) {
    r.x[q] = p.ops[q].x ? 1 : 0;
    r.z[q] = p.ops[q].z ? 1 : 0;
    y_count += (p.ops[q].x && p.ops[q].z) ? 1 : 0;
  }
  r.phase = (y_count + (outcome_minus ? 2 : 0)) % 4;
  return r;
}

std::pair<int, PauliString> Tableau::row_as_pauli(const Row& row) const {
  PauliString p(n_);
  int y_count = 0;
  for (std::size_t q = 0; q < n_; ++q) {
    p.ops[q] = PauliOp{row.x[q] != 0, row.z[q] != 0};
    y_count += (row.x[q] & row.z[q]);
  }
  const int rem = ((row.phase - y_count) % 4 + 4) % 4;
  if (rem % 2 != 0) throw std::logic_error("tableau row has imaginary sign");
  return {rem == 0 ? +1 : -1, std::move(p)};
}

MeasurementResult Tableau::measure_impl(const PauliString& p,
                                        RandomStream* rng,
                                        bool forced_minus) {
  if (p.size() != n_)
    throw std::invalid_argument("observable length != qubit count");
  if (p.is_identity())
    throw std::invalid_argument("cannot measure the identity");

  std::size_t pivot = n_;
  for (std::size_t i = 0; i < n_; ++i) {
    if (anticommutes(stab_[i], p)) {
      pivot = i;
      break;
    }
  }

  MeasurementResult result;
  if (pivot < n_) {
    result.was_random = true;
    result.outcome_minus = rng ? rng->next_bool() : forced_minus;
    const Row pivot_row = stab_[pivot];
    for (std::size_t i = 0; i < n_; ++i) {
      if (i != pivot && anticommutes(stab_[i], p))
        multiply_into(stab_[i], pivot_row);
      if (anticommutes(destab_[i], p)) multiply_into(destab_[i], pivot_row);
    }
    destab_[pivot] = pivot_row;
    stab_[pivot] = row_of(p, result.outcome_minus);
  } else {
    // The observable is in the stabilizer group: rebuild it as the product
    // of the generators flagged by anticommuting destabilizers and read the
    // accumulated sign.  The pattern comparison is a self-check of the
    // phase arithmetic.
    Row acc;
    acc.x.assign(n_, 0);
    acc.z.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      if (anticommutes(destab_[i], p)) multiply_into(acc, stab_[i]);
    }
    const Row target = row_of(p, false);
    if (acc.x != target.x || acc.z != target.z)
      throw std::logic_error(
          "deterministic measurement did not reproduce the observable");
    const int diff = ((acc.phase - target.phase) % 4 + 4) % 4;
    if (diff % 2 != 0)
      throw std::logic_error("deterministic measurement sign is imaginary");
    result.outcome_minus = diff == 2;
    if (!rng && result.outcome_minus != forced_minus)
      throw std::logic_error(
          "forced outcome contradicts a deterministic measurement");
  }
  if (paranoid_ && !check_invariants())
    throw std::logic_error("tableau invariants violated after measurement");
  return result;
}

MeasurementResult Tableau::measure(const PauliString& p, RandomStream& rng) {
  return measure_impl(p, &rng, false);
}

MeasurementResult Tableau::measure_forced(const PauliString& p,
                                          bool outcome_minus) {
  return measure_impl(p, nullptr, outcome_minus);
}

MeasurementResult Tableau::measure_z(std::size_t q, RandomStream& rng) {
  PauliString p(n_);
  p.ops[q] = kPauliZ;
  return measure(p, rng);
}

std::pair<int, PauliString> Tableau::stabilizer(std::size_t i) const {
  return row_as_pauli(stab_.at(i));
}

std::pair<int, PauliString> Tableau::destabilizer(std::size_t i) const {
  return row_as_pauli(destab_.at(i));
}

std::string Tableau::stabilizer_str(std::size_t i) const {
  const auto [sign, p] = stabilizer(i);
  return (sign > 0 ? "+" : "-") + p.str();
}

bool Tableau::check_invariants() const {
  const auto commute_parity = [this](const Row& a, const Row& b) {
    int parity = 0;
    for (std::size_t q = 0; q < n_; ++q) {
      parity ^= a.x[q] & b.z[q];
      parity ^= a.z[q] & b.x[q];
    }
    return parity;
  };
  for (const auto* rows : {&destab_, &stab_}) {
    for (const Row& r : *rows) {
      int y_count = 0;
      for (std::size_t q = 0; q < n_; ++q) y_count += r.x[q] & r.z[q];
      if (((r.phase - y_count) % 2 + 2) % 2 != 0) return false;
    }
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (commute_parity(stab_[i], stab_[j]) != 0) return false;
      if (commute_parity(destab_[i], destab_[j]) != 0) return false;
      if (commute_parity(destab_[i], stab_[j]) != (i == j ? 1 : 0))
        return false;
    }
  }
  return true;
}

void Tableau::after_gate() {
  if (paranoid_ && !check_invariants())
    throw std::logic_error("tableau invariants violated after gate");
}

}  // namespace opqec
