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

#include "opqec/channel.hpp"

#include <stdexcept>

namespace opqec {

void PauliChannel::validate() const {
  for (double p : {px, py, pz}) {
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("channel probability outside [0,1]");
  }
  if (p_error() > 1.0 + 1e-12)
    throw std::invalid_argument("channel probabilities sum above 1");
}

PauliOp PauliChannel::sample(RandomStream& rng) const {
  const double u = rng.uniform01();
  if (u < px) return kPauliX;
  if (u < px + py) return kPauliY;
  if (u < px + py + pz) return kPauliZ;
  return kPauliI;
}

PauliChannel depolarizing(double p) { return PauliChannel{p / 3, p / 3, p / 3}; }

PauliChannel bit_flip(double p) { return PauliChannel{p, 0.0, 0.0}; }

PauliChannel dephasing(double p) { return PauliChannel{0.0, 0.0, p}; }

PauliChannel werner(double fidelity) {
  const double w = (1.0 - fidelity) / 3.0;
  return PauliChannel{w, w, w};
}

PauliChannel independent_components(double q) {
  if (!(q >= 0.0 && q <= 1.0))
    throw std::invalid_argument("per-type rate outside [0,1]");
  return PauliChannel{q * (1.0 - q), q * q, (1.0 - q) * q};
}

PauliChannel compose_channels(const PauliChannel& first,
                              const PauliChannel& second) {
  first.validate();
  second.validate();
  // Probabilities indexed like kPaulis: I, X, Z, Y.
  const std::array<double, 4> a = {first.p_identity(), first.px, first.pz,
                                   first.py};
  const std::array<double, 4> b = {second.p_identity(), second.px, second.pz,
                                   second.py};
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out[(kPaulis[i] * kPaulis[j]).index()] += a[i] * b[j];
  return PauliChannel{out[1], out[3], out[2]};
}

PairError sample_flying_error(const PauliChannel& c, RandomStream& rng) {
  return PairError{kPauliI, c.sample(rng)};
}

PairError sample_pair_error(const PauliChannel& flying_channel,
                            const PauliChannel& home_channel,
                            RandomStream& rng) {
  const PauliOp home = home_channel.sample(rng);
  return PairError{home, flying_channel.sample(rng)};
}

PauliOp axis_cycle(PauliOp p, int times) {
  PauliOp r = p;
  for (int i = ((times % 3) + 3) % 3; i > 0; --i) r = PauliOp{r.x != r.z, r.x};
  return r;
}

PauliOp hadamard_conjugate(PauliOp p) { return PauliOp{p.z, p.x}; }

PauliOp sixstate_symmetrize(PauliOp e, int r) { return axis_cycle(e, r); }

PauliOp sixstate_undo(PauliOp e, int r) { return axis_cycle(e, 3 - r); }

namespace {

constexpr std::uint8_t kI = 0, kX = 1, kZ = 2, kY = 3;

}  // namespace

// Order matches twirl_element_matrix: identity, the two axis cycles, then
// the three transpositions (fixing Z, X, Y respectively).
const std::array<LabelPerm, 6> kTwirlGroup = {{
    {{kI, kX, kZ, kY}},  // identity
    {{kI, kY, kX, kZ}},  // X->Y->Z->X
    {{kI, kZ, kY, kX}},  // X->Z->Y->X
    {{kI, kY, kZ, kX}},  // X<->Y
    {{kI, kX, kY, kZ}},  // Y<->Z
    {{kI, kZ, kX, kY}},  // X<->Z
}};

Mat2 twirl_element_matrix(int index) {
  switch (index) {
    case 0: return kMatI;
    case 1: return kMatAxisCycle;
    case 2: return mat_mul(kMatAxisCycle, kMatAxisCycle);
    case 3: return kMatS;
    case 4: return kMatSqrtX;
    case 5: return kMatSqrtY;
    default: throw std::out_of_range("twirl element index must be in 0..5");
  }
}

PauliChannel twirl_distribution(const PauliChannel& c) {
  const double avg = c.p_error() / 3.0;
  return PauliChannel{avg, avg, avg};
}

PairError twirl_frame(const PairError& f, RandomStream& rng) {
  const LabelPerm& perm = kTwirlGroup[rng.uniform_below(6)];
  return PairError{perm.apply(f.home), perm.apply(f.flying)};
}

}  // namespace opqec
