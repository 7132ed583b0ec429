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

#ifndef OPQEC_PAULI_HPP_
#define OPQEC_PAULI_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace opqec {

/// Single-qubit Pauli operator with global phase dropped, stored in binary
/// symplectic form: I=(0,0), X=(1,0), Z=(0,1), Y=(1,1).
struct PauliOp {
  bool x = false;
  bool z = false;

  constexpr bool is_identity() const { return !x && !z; }

  constexpr bool operator==(const PauliOp&) const = default;

  /// Phase-free product: componentwise XOR.
  constexpr PauliOp operator*(PauliOp other) const {
    return PauliOp{x != other.x, z != other.z};
  }
  constexpr PauliOp& operator*=(PauliOp other) {
    x = (x != other.x);
    z = (z != other.z);
    return *this;
  }

  /// True iff the two operators commute.
  constexpr bool commutes_with(PauliOp other) const {
    return (x && other.z) == (z && other.x);
  }

  char letter() const {
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
  }

  static PauliOp from_letter(char c) {
    switch (c) {
      case 'I': return PauliOp{false, false};
      case 'X': return PauliOp{true, false};
      case 'Z': return PauliOp{false, true};
      case 'Y': return PauliOp{true, true};
      default: throw std::invalid_argument("not a Pauli letter: " + std::string(1, c));
    }
  }

  /// Index in the fixed order I, X, Z, Y (used for tables keyed by operator).
  constexpr int index() const { return (x ? 1 : 0) + (z ? 2 : 0); }
};

inline constexpr PauliOp kPauliI{false, false};
inline constexpr PauliOp kPauliX{true, false};
inline constexpr PauliOp kPauliZ{false, true};
inline constexpr PauliOp kPauliY{true, true};

/// All four single-qubit Paulis, indexed by PauliOp::index().
inline constexpr PauliOp kPaulis[4] = {kPauliI, kPauliX, kPauliZ, kPauliY};

constexpr PauliOp pauli_mul(PauliOp a, PauliOp b) { return a * b; }

/// Symplectic inner product of two equal-length Pauli strings:
/// 0 means they commute, 1 means they anticommute.
struct PauliString {
  std::vector<PauliOp> ops;

  PauliString() = default;
  explicit PauliString(std::size_t n) : ops(n) {}

  static PauliString from_str(const std::string& s) {
    PauliString p(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) p.ops[i] = PauliOp::from_letter(s[i]);
    return p;
  }

  std::size_t size() const { return ops.size(); }

  std::size_t weight() const {
    std::size_t w = 0;
    for (const auto& op : ops) w += op.is_identity() ? 0 : 1;
    return w;
  }

  bool is_identity() const { return weight() == 0; }

  std::string str() const {
    std::string s;
    s.reserve(ops.size());
    for (const auto& op : ops) s.push_back(op.letter());
    return s;
  }

  PauliString& operator*=(const PauliString& other) {
    if (ops.size() != other.ops.size())
      throw std::invalid_argument("PauliString size mismatch in product");
    for (std::size_t i = 0; i < ops.size(); ++i) ops[i] *= other.ops[i];
    return *this;
  }
  PauliString operator*(const PauliString& other) const {
    PauliString r = *this;
    r *= other;
    return r;
  }

  bool operator==(const PauliString&) const = default;
};

inline bool commutes(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("PauliString size mismatch in commutes()");
  bool anti = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    anti ^= (a.ops[i].x && b.ops[i].z);
    anti ^= (a.ops[i].z && b.ops[i].x);
  }
  return !anti;
}

/// Phase of the ordered operator product a * b when every letter is read as
/// its usual Hermitian matrix (Y = i X Z): the product equals
/// i^phase * (a * b as a phase-free string), phase mod 4.
///
/// Writing a letter as i^y X^x Z^z with y = x & z, reordering the Z of `a`
/// past the X of `b` on each site contributes (-1)^(z_a x_b); the remaining
/// correction converts the accumulated i^y factors to the canonical form of
/// the product letter.
inline int pauli_product_phase(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("PauliString size mismatch in product phase");
  int phase = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const PauliOp& pa = a.ops[i];
    const PauliOp& pb = b.ops[i];
    const PauliOp pr = pa * pb;
    phase += (pa.x && pa.z) ? 1 : 0;
    phase += (pb.x && pb.z) ? 1 : 0;
    phase += (pa.z && pb.x) ? 2 : 0;
    phase -= (pr.x && pr.z) ? 1 : 0;
  }
  return ((phase % 4) + 4) % 4;
}

}  // namespace opqec

#endif  // OPQEC_PAULI_HPP_
