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

#ifndef OPQEC_BELL_HPP_
#define OPQEC_BELL_HPP_

#include <cstdint>
#include <string>

#include "opqec/pauli.hpp"

namespace opqec {

/// Which Bell state a pair is in, identified by the signs of its two
/// stabilizing observables ZZ and XX.  The four combinations:
///
///   zz_minus  xx_minus  state
///   false     false     Phi+   (|00>+|11>)/sqrt(2)
///   false     true      Phi-   (|00>-|11>)/sqrt(2)
///   true      false     Psi+   (|01>+|10>)/sqrt(2)
///   true      true      Psi-   (|01>-|10>)/sqrt(2)
struct BellLabel {
  bool zz_minus = false;
  bool xx_minus = false;

  constexpr bool operator==(const BellLabel&) const = default;

  constexpr bool is_phi_plus() const { return !zz_minus && !xx_minus; }

  /// Two-bit encoding with the ZZ sign as the high bit.
  constexpr std::uint8_t bits() const {
    return static_cast<std::uint8_t>((zz_minus ? 2 : 0) | (xx_minus ? 1 : 0));
  }
  static constexpr BellLabel from_bits(std::uint8_t b) {
    return BellLabel{(b & 2) != 0, (b & 1) != 0};
  }

  std::string name() const {
    switch (bits()) {
      case 0: return "Phi+";
      case 1: return "Phi-";
      case 2: return "Psi+";
      default: return "Psi-";
    }
  }
};

inline constexpr BellLabel kBellPhiPlus{false, false};
inline constexpr BellLabel kBellPhiMinus{false, true};
inline constexpr BellLabel kBellPsiPlus{true, false};
inline constexpr BellLabel kBellPsiMinus{true, true};

/// Pauli errors accumulated on the two halves of one pair.  `home` is the
/// half that never leaves the lab; `flying` is the transmitted half.
struct PairError {
  PauliOp home;
  PauliOp flying;

  constexpr bool operator==(const PairError&) const = default;

  constexpr bool is_identity() const {
    return home.is_identity() && flying.is_identity();
  }

  constexpr PairError operator*(const PairError& other) const {
    return PairError{home * other.home, flying * other.flying};
  }
  constexpr PairError& operator*=(const PairError& other) {
    home *= other.home;
    flying *= other.flying;
    return *this;
  }

  /// Whether this frame flips the sign of the pair's ZZ observable:
  /// each X or Y factor anticommutes with the Z on its side.
  constexpr bool flips_zz() const { return home.x != flying.x; }

  /// Whether this frame flips the sign of the pair's XX observable.
  constexpr bool flips_xx() const { return home.z != flying.z; }
};

/// Bell state reached by applying `frame` to a pair currently in `label`.
constexpr BellLabel bell_after_frame(BellLabel label, const PairError& frame) {
  return BellLabel{label.zz_minus != frame.flips_zz(),
                   label.xx_minus != frame.flips_xx()};
}

/// Bell state reached from Phi+ under `frame`.
constexpr BellLabel bell_after_error(const PairError& frame) {
  return bell_after_frame(kBellPhiPlus, frame);
}

}  // namespace opqec

#endif  // OPQEC_BELL_HPP_
