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

#include "opqec/statevector.hpp"

#include <cmath>
#include <stdexcept>

namespace opqec {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244;
const Complex kI{0.0, 1.0};
}  // namespace

const Mat2 kMatI{Complex{1}, Complex{0}, Complex{0}, Complex{1}};
const Mat2 kMatX{Complex{0}, Complex{1}, Complex{1}, Complex{0}};
const Mat2 kMatY{Complex{0}, -kI, kI, Complex{0}};
const Mat2 kMatZ{Complex{1}, Complex{0}, Complex{0}, Complex{-1}};
const Mat2 kMatH{Complex{kInvSqrt2}, Complex{kInvSqrt2}, Complex{kInvSqrt2},
                 Complex{-kInvSqrt2}};
const Mat2 kMatS{Complex{1}, Complex{0}, Complex{0}, kI};
const Mat2 kMatSdg{Complex{1}, Complex{0}, Complex{0}, -kI};
const Mat2 kMatSqrtX{Complex{0.5, 0.5}, Complex{0.5, -0.5}, Complex{0.5, -0.5},
                     Complex{0.5, 0.5}};
const Mat2 kMatSqrtY{Complex{0.5, 0.5}, Complex{-0.5, -0.5}, Complex{0.5, 0.5},
                     Complex{0.5, 0.5}};
const Mat2 kMatAxisCycle{Complex{kInvSqrt2}, -kI * kInvSqrt2,
                         Complex{kInvSqrt2}, kI * kInvSqrt2};

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  return Mat2{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
              a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 mat_adjoint(const Mat2& a) {
  return Mat2{std::conj(a[0]), std::conj(a[2]), std::conj(a[1]),
              std::conj(a[3])};
}

Mat2 mat_scale(Complex s, const Mat2& a) {
  return Mat2{s * a[0], s * a[1], s * a[2], s * a[3]};
}

bool mat_approx_equal(const Mat2& a, const Mat2& b, double tol) {
  for (int i = 0; i < 4; ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

bool mat_equal_up_to_phase(const Mat2& a, const Mat2& b, double tol) {
  int pivot = 0;
  double best = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (std::abs(b[i]) > best) {
      best = std::abs(b[i]);
      pivot = i;
    }
  }
  if (best <= tol) {
    for (int i = 0; i < 4; ++i) {
      if (std::abs(a[i]) > tol) return false;
    }
    return true;
  }
  const Complex phase = a[pivot] / b[pivot];
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  return mat_approx_equal(a, mat_scale(phase, b), tol);
}

Mat2 mat_conjugate(const Mat2& a, const Mat2& u) {
  return mat_mul(mat_mul(a, u), mat_adjoint(a));
}

Mat2 pauli_matrix(PauliOp p) {
  switch (p.index()) {
    case 0: return kMatI;
    case 1: return kMatX;
    case 2: return kMatZ;
    default: return kMatY;
  }
}

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 20)
    throw std::invalid_argument("Statevector supports 1..20 qubits");
  amps_.assign(std::size_t{1} << num_qubits, Complex{0});
  amps_[0] = Complex{1};
}

double Statevector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void Statevector::normalize() {
  const double n = norm();
  if (n <= 0.0) throw std::logic_error("cannot normalize zero state");
  for (auto& a : amps_) a /= n;
}

void Statevector::apply_1q(const Mat2& m, int qubit) {
  const std::size_t stride = std::size_t{1} << (num_qubits_ - 1 - qubit);
  for (std::size_t base = 0; base < amps_.size(); ++base) {
    if (base & stride) continue;
    const Complex a0 = amps_[base];
    const Complex a1 = amps_[base | stride];
    amps_[base] = m[0] * a0 + m[1] * a1;
    amps_[base | stride] = m[2] * a0 + m[3] * a1;
  }
}

void Statevector::apply_pauli(PauliOp p, int qubit) {
  if (!p.is_identity()) apply_1q(pauli_matrix(p), qubit);
}

void Statevector::apply_pauli_string(const PauliString& p) {
  if (static_cast<int>(p.size()) != num_qubits_)
    throw std::invalid_argument("Pauli string length != qubit count");
  for (int q = 0; q < num_qubits_; ++q) apply_pauli(p.ops[q], q);
}

void Statevector::apply_cnot(int control, int target) {
  const std::size_t cbit = std::size_t{1} << (num_qubits_ - 1 - control);
  const std::size_t tbit = std::size_t{1} << (num_qubits_ - 1 - target);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
  }
}

void Statevector::apply_cz(int a, int b) {
  const std::size_t abit = std::size_t{1} << (num_qubits_ - 1 - a);
  const std::size_t bbit = std::size_t{1} << (num_qubits_ - 1 - b);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & abit) && (i & bbit)) amps_[i] = -amps_[i];
  }
}

double Statevector::prob_zero(int qubit) const {
  const std::size_t qbit = std::size_t{1} << (num_qubits_ - 1 - qubit);
  double p = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (!(i & qbit)) p += std::norm(amps_[i]);
  }
  return p;
}

void Statevector::collapse(int qubit, bool outcome_one) {
  const std::size_t qbit = std::size_t{1} << (num_qubits_ - 1 - qubit);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (((i & qbit) != 0) != outcome_one) amps_[i] = Complex{0};
  }
  normalize();
}

Complex Statevector::inner(const Statevector& other) const {
  if (other.num_qubits_ != num_qubits_)
    throw std::invalid_argument("inner product dimension mismatch");
  Complex s{0};
  for (std::size_t i = 0; i < amps_.size(); ++i)
    s += std::conj(amps_[i]) * other.amps_[i];
  return s;
}

Statevector Statevector::bell(bool zz_minus, bool xx_minus) {
  Statevector psi(2);
  psi.amps_[0] = Complex{0};
  if (!zz_minus) {
    psi.amps_[0b00] = Complex{kInvSqrt2};
    psi.amps_[0b11] = xx_minus ? Complex{-kInvSqrt2} : Complex{kInvSqrt2};
  } else {
    psi.amps_[0b01] = Complex{kInvSqrt2};
    psi.amps_[0b10] = xx_minus ? Complex{-kInvSqrt2} : Complex{kInvSqrt2};
  }
  return psi;
}

Complex pauli_bracket(const Statevector& bra, const PauliString& p,
                      const Statevector& ket) {
  Statevector moved = ket;
  moved.apply_pauli_string(p);
  return bra.inner(moved);
}

}  // namespace opqec
