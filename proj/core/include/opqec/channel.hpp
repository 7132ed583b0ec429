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

#ifndef OPQEC_CHANNEL_HPP_
#define OPQEC_CHANNEL_HPP_

#include <array>
#include <cstdint>

#include "opqec/bell.hpp"
#include "opqec/pauli.hpp"
#include "opqec/rng.hpp"
#include "opqec/statevector.hpp"

namespace opqec {

/// Memoryless Pauli error channel on one transmitted qubit.
struct PauliChannel {
  double px = 0.0;
  double py = 0.0;
  double pz = 0.0;

  double p_error() const { return px + py + pz; }
  double p_identity() const { return 1.0 - p_error(); }

  /// For a Bell pair whose flying half passes through this channel, the
  /// fidelity with the intended state equals the no-error probability.
  double fidelity() const { return p_identity(); }

  /// Marginal probability of a bit-type component (X or Y).
  double p_bit() const { return px + py; }
  /// Marginal probability of a phase-type component (Z or Y).
  double p_phase() const { return pz + py; }

  /// Throws std::invalid_argument unless all probabilities are in [0,1]
  /// and sum to at most 1.
  void validate() const;

  /// Draw one error; selection order is X, Y, Z, then identity.
  PauliOp sample(RandomStream& rng) const;
};

PauliChannel depolarizing(double p);
PauliChannel bit_flip(double p);
PauliChannel dephasing(double p);

/// Channel whose output on a Bell pair is the Werner state of the given
/// fidelity: X, Y, Z each with probability (1 - fidelity)/3.
PauliChannel werner(double fidelity);

/// Channel whose bit-flip and phase-flip components are independent
/// Bernoulli(q) draws, the per-type convention of the concatenation
/// recursion: px = pz = q(1-q), py = q².
PauliChannel independent_components(double q);

/// Exact distribution of applying an error from `first` and then one from
/// `second` to the same qubit (the group convolution of the two channels).
PauliChannel compose_channels(const PauliChannel& first,
                              const PauliChannel& second);

/// Frame for one pair after the flying half passed through `c`.
PairError sample_flying_error(const PauliChannel& c, RandomStream& rng);

/// Frame for one pair with independent noise on both halves.
PairError sample_pair_error(const PauliChannel& flying_channel,
                            const PauliChannel& home_channel,
                            RandomStream& rng);

/// Conjugation by the axis-cycling Clifford, repeated `times` times:
/// X -> Y -> Z -> X, identity fixed.  In symplectic form one application
/// sends (x, z) to (x xor z, x).
PauliOp axis_cycle(PauliOp p, int times = 1);

/// Conjugation by the Hadamard: swaps the X and Z components.
PauliOp hadamard_conjugate(PauliOp p);

/// Rotation applied to a qubit under the six-state symmetrization with
/// rotation count r in {0, 1, 2}.
PauliOp sixstate_symmetrize(PauliOp e, int r);

/// Error seen after the receiver undoes a rotation count of r: the channel
/// error e conjugated by the inverse rotation.
PauliOp sixstate_undo(PauliOp e, int r);

/// Permutation of the non-identity Pauli labels; the identity label is fixed.
struct LabelPerm {
  /// to[PauliOp::index()] = index of the image; to[0] == 0 always.
  std::array<std::uint8_t, 4> to;

  PauliOp apply(PauliOp p) const { return kPaulis[to[p.index()]]; }
};

/// The six label permutations, each realized by conjugation with a
/// single-qubit Clifford (see twirl_element_matrix).  Uniformly averaging
/// over them is the Werner twirl.
extern const std::array<LabelPerm, 6> kTwirlGroup;

/// A unitary whose conjugation action permutes Pauli labels (up to sign)
/// as kTwirlGroup[index] does.
Mat2 twirl_element_matrix(int index);

/// Exact effect of the twirl on a channel: the three non-identity
/// probabilities are replaced by their common average.
PauliChannel twirl_distribution(const PauliChannel& c);

/// Apply one uniformly chosen twirl element to both halves of a frame.
PairError twirl_frame(const PairError& f, RandomStream& rng);

}  // namespace opqec

#endif  // OPQEC_CHANNEL_HPP_
