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

#ifndef OPQEC_STATEVECTOR_HPP_
#define OPQEC_STATEVECTOR_HPP_

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "opqec/pauli.hpp"

namespace opqec {

using Complex = std::complex<double>;

/// 2x2 complex matrix, row major: {m00, m01, m10, m11}.
using Mat2 = std::array<Complex, 4>;

Mat2 mat_mul(const Mat2& a, const Mat2& b);
Mat2 mat_adjoint(const Mat2& a);
Mat2 mat_scale(Complex s, const Mat2& a);
bool mat_approx_equal(const Mat2& a, const Mat2& b, double tol = 1e-12);

/// True iff a == phase * b for some unit complex phase.
bool mat_equal_up_to_phase(const Mat2& a, const Mat2& b, double tol = 1e-12);

/// a U a^dagger (conjugation of U by a).
Mat2 mat_conjugate(const Mat2& a, const Mat2& u);

Mat2 pauli_matrix(PauliOp p);

extern const Mat2 kMatI;
extern const Mat2 kMatX;
extern const Mat2 kMatY;
extern const Mat2 kMatZ;
extern const Mat2 kMatH;
extern const Mat2 kMatS;      // diag(1, i)
extern const Mat2 kMatSdg;    // diag(1, -i)
extern const Mat2 kMatSqrtX;  // exp(-i pi X / 4) up to phase
extern const Mat2 kMatSqrtY;  // exp(-i pi Y / 4) up to phase

/// The axis-cycling Clifford (1/sqrt(2)) [[1, -i], [1, i]]; conjugation sends
/// X -> Y -> Z -> X.
extern const Mat2 kMatAxisCycle;

/// Dense state-vector simulator used as an independent oracle for small
/// systems.  Qubit 0 is the most significant bit of the basis index, so a
/// basis ket reads left to right like the Pauli strings applied to it.
class Statevector {
 public:
  /// |0...0> on `num_qubits` qubits.
  explicit Statevector(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }

  Complex amplitude(std::size_t basis) const { return amps_[basis]; }
  void set_amplitude(std::size_t basis, Complex a) { amps_[basis] = a; }

  double norm() const;
  void normalize();

  void apply_1q(const Mat2& m, int qubit);
  void apply_pauli(PauliOp p, int qubit);
  void apply_pauli_string(const PauliString& p);
  void apply_cnot(int control, int target);
  void apply_cz(int a, int b);

  /// Probability that a Z-basis measurement of `qubit` yields 0.
  double prob_zero(int qubit) const;

  /// Project onto the given Z-measurement outcome and renormalize.
  void collapse(int qubit, bool outcome_one);

  /// <this|other>.
  Complex inner(const Statevector& other) const;

  /// The two-qubit Bell state with the given ZZ/XX signs (Phi+ by default):
  /// (|00> +- |11>)/sqrt(2) or (|01> +- |10>)/sqrt(2).
  static Statevector bell(bool zz_minus, bool xx_minus);

 private:
  bool bit(std::size_t basis, int qubit) const {
    return (basis >> (num_qubits_ - 1 - qubit)) & 1u;
  }

  int num_qubits_;
  std::vector<Complex> amps_;
};

/// <bra| P |ket>.
Complex pauli_bracket(const Statevector& bra, const PauliString& p,
                      const Statevector& ket);

}  // namespace opqec

#endif  // OPQEC_STATEVECTOR_HPP_
