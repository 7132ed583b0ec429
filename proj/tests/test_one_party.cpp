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

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "opqec/one_party.hpp"
#include "opqec/rng.hpp"

using namespace opqec;

namespace {

OnePartyCode lift621() { return OnePartyCode::lift(ClassicalCode::repetition3()); }

std::vector<PairError> flying_pattern(PauliOp a, PauliOp b, PauliOp c) {
  return {PairError{kPauliI, a}, PairError{kPauliI, b}, PairError{kPauliI, c}};
}

}  // namespace

TEST_CASE("bell label bookkeeping") {
  CHECK(kBellPhiPlus.bits() == 0);
  CHECK(kBellPhiMinus.bits() == 1);
  CHECK(kBellPsiPlus.bits() == 2);
  CHECK(kBellPsiMinus.bits() == 3);
  for (std::uint8_t b = 0; b < 4; ++b) CHECK(BellLabel::from_bits(b).bits() == b);
  CHECK(kBellPhiPlus.name() == "Phi+");
  CHECK(kBellPsiMinus.name() == "Psi-");

  // X on either half makes Psi+, Z makes Phi-, Y makes Psi-.
  CHECK(bell_after_error(PairError{kPauliI, kPauliX}) == kBellPsiPlus);
  CHECK(bell_after_error(PairError{kPauliX, kPauliI}) == kBellPsiPlus);
  CHECK(bell_after_error(PairError{kPauliI, kPauliZ}) == kBellPhiMinus);
  CHECK(bell_after_error(PairError{kPauliI, kPauliY}) == kBellPsiMinus);
  // Equal errors on both halves cancel at the label level.
  CHECK(bell_after_error(PairError{kPauliY, kPauliY}) == kBellPhiPlus);
}

TEST_CASE("lifted three-pair code structure") {
  const OnePartyCode code = lift621();
  CHECK(code.n_pairs() == 3);
  CHECK(code.n_qubits() == 6);
  CHECK(code.k() == 1);
  CHECK(code.t() == 1);
  REQUIRE(code.stab_z().size() == 2);
  REQUIRE(code.stab_x().size() == 2);
  CHECK(code.stab_z()[0].str() == "ZZZZII");
  CHECK(code.stab_z()[1].str() == "IIZZZZ");
  CHECK(code.stab_x()[0].str() == "XXXXII");
  CHECK(code.stab_x()[1].str() == "IIXXXX");
  CHECK(code.logical_readout_faithful());
}

TEST_CASE("logical operators of the three-pair code") {
  const OnePartyCode code = lift621();
  CHECK(code.logical_op(LogicalOpKind::kIdentity, 0).str() == "IIIIII");
  CHECK(code.logical_op(LogicalOpKind::kXOdd, 0).str() == "IXIXIX");
  CHECK(code.logical_op(LogicalOpKind::kZOdd, 0).str() == "ZZZZZZ");
  CHECK(code.logical_op(LogicalOpKind::kXEven, 0).str() == "ZIZIZI");
  CHECK(code.logical_op(LogicalOpKind::kZEven, 0).str() == "XXXXXX");
  CHECK(code.logical_op(LogicalOpKind::kUEven, 0).str() == "XIXIXI");
  CHECK(code.logical_op(LogicalOpKind::kVEven, 0).str() == "YIYIYI");
}

TEST_CASE("stabilizers and logical operators all commute") {
  for (const ClassicalCode& base :
       {ClassicalCode::repetition3(), ClassicalCode::hamming7()}) {
    const OnePartyCode code = OnePartyCode::lift(base);
    std::vector<PauliString> stabs = code.stab_z();
    for (const auto& s : code.stab_x()) stabs.push_back(s);
    for (const auto& a : stabs)
      for (const auto& b : stabs) CHECK(commutes(a, b));
    for (std::size_t i = 0; i < code.k(); ++i) {
      for (LogicalOpKind kind :
           {LogicalOpKind::kXOdd, LogicalOpKind::kZOdd, LogicalOpKind::kXEven,
            LogicalOpKind::kZEven, LogicalOpKind::kUEven,
            LogicalOpKind::kVEven}) {
        const PauliString op = code.logical_op(kind, i);
        for (const auto& s : stabs) CHECK(commutes(op, s));
      }
    }
  }
}

TEST_CASE("dense-coding operator pair anticommutes like logical X and Z") {
  const OnePartyCode code = lift621();
  const PauliString u = code.logical_op(LogicalOpKind::kUEven, 0);
  const PauliString x = code.logical_op(LogicalOpKind::kXOdd, 0);
  const PauliString zo = code.logical_op(LogicalOpKind::kZOdd, 0);
  const PauliString xe = code.logical_op(LogicalOpKind::kXEven, 0);
  CHECK_FALSE(commutes(x, zo));   // the encoded pair's X and Z
  CHECK_FALSE(commutes(u, zo));   // the alternate bit-flip behaves alike
  CHECK_FALSE(commutes(xe, code.logical_op(LogicalOpKind::kZEven, 0)));
  CHECK(commutes(x, xe));
}

TEST_CASE("syndromes are side-insensitive and match the derived table") {
  const OnePartyCode code = lift621();
  for (int bit = -1; bit < 3; ++bit) {
    for (int phase = -1; phase < 3; ++phase) {
      std::vector<PairError> on_flying(3), on_home(3);
      if (bit >= 0) {
        on_flying[bit].flying = kPauliX;
        on_home[bit].home = kPauliX;
      }
      if (phase >= 0) {
        on_flying[phase].flying = on_flying[phase].flying * kPauliZ;
        on_home[phase].home = on_home[phase].home * kPauliZ;
      }
      const SyndromeRecord s = code.extract_syndrome(on_flying);
      CHECK(code.extract_syndrome(on_home) == s);
      const std::array<int, 4> derived = derived_syndrome_signs_621(bit, phase);
      CHECK((s.x_synd[0] ? -1 : 1) == derived[0]);
      CHECK((s.x_synd[1] ? -1 : 1) == derived[1]);
      CHECK((s.z_synd[0] ? -1 : 1) == derived[2]);
      CHECK((s.z_synd[1] ? -1 : 1) == derived[3]);
    }
  }
}

TEST_CASE("published syndrome table has exactly one inconsistent row") {
  const auto& table = reference_syndrome_table_621();
  std::size_t flagged = 0;
  for (const auto& row : table) {
    const auto derived = derived_syndrome_signs_621(row.bit_pair, row.phase_pair);
    if (row.published_inconsistent) {
      ++flagged;
      CHECK(derived != row.signs);
    } else {
      CHECK(derived == row.signs);
    }
  }
  CHECK(flagged == 1);
}

TEST_CASE("single errors are corrected exactly") {
  const OnePartyCode code = lift621();
  for (std::size_t pair = 0; pair < 3; ++pair) {
    for (PauliOp e : {kPauliX, kPauliY, kPauliZ}) {
      std::vector<PairError> errors(3);
      errors[pair].flying = e;
      const SyndromeRecord synd = code.extract_syndrome(errors);
      const Correction corr = code.decode_and_correct(synd);
      CHECK(corr.status == CorrectionStatus::kCorrected);
      CHECK(corr.flying[pair] == e);
      for (const BellLabel& label : code.corrected_labels(errors, corr))
        CHECK(label == kBellPhiPlus);
    }
  }
}

TEST_CASE("exhaustive single-bit single-phase correction soundness") {
  const OnePartyCode code = lift621();
  std::size_t correctable = 0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        const auto errors = flying_pattern(kPaulis[a], kPaulis[b], kPaulis[c]);
        int bits = 0, phases = 0;
        for (const auto& e : errors) {
          bits += e.flying.x ? 1 : 0;
          phases += e.flying.z ? 1 : 0;
        }
        const Correction corr =
            code.decode_and_correct(code.extract_syndrome(errors));
        bool clean = true;
        for (const BellLabel& label : code.corrected_labels(errors, corr))
          clean = clean && label == kBellPhiPlus;
        if (bits <= 1 && phases <= 1) {
          ++correctable;
          CHECK(corr.status == CorrectionStatus::kCorrected);
          CHECK(clean);
        } else {
          // Heavier patterns must be flagged: the decoder either reports
          // ambiguity or silently applies a logical operator, never both
          // clean and corrected.
          CHECK((corr.status != CorrectionStatus::kCorrected || !clean));
        }
      }
    }
  }
  CHECK(correctable == 16);  // 4 bit placements x 4 phase placements
}

TEST_CASE("miscorrection of a double bit flip is a clean logical flip") {
  const OnePartyCode code = lift621();
  std::vector<PairError> errors = flying_pattern(kPauliX, kPauliX, kPauliI);
  const Correction corr = code.decode_and_correct(code.extract_syndrome(errors));
  // The double flip looks like the complementary single flip, so the
  // decoder reports success while applying the wrong correction.
  CHECK(corr.status == CorrectionStatus::kCorrected);
  const auto labels = code.corrected_labels(errors, corr);
  // Residual equals the bit-type logical operator: every pair reads Psi+.
  for (const BellLabel& label : labels) CHECK(label == kBellPsiPlus);
  const LogicalState logical = code.logical_labels(labels);
  CHECK(logical.labels[0] == kBellPsiPlus);
}

TEST_CASE("label transforms match the published logical table") {
  const OnePartyCode code = lift621();
  for (const auto& row : reference_logical_transforms_621()) {
    LogicalState state;
    state.labels = {BellLabel::from_bits(row.state)};
    const LogicalState image = code.apply_logical(row.op, 0, state);
    CHECK(image.labels[0].bits() == row.target);
  }
}

TEST_CASE("encoding operators land the four message chunks on four states") {
  const OnePartyCode code = lift621();
  CHECK(encoding_op_for(false, false) == LogicalOpKind::kIdentity);
  CHECK(encoding_op_for(false, true) == LogicalOpKind::kXEven);
  CHECK(encoding_op_for(true, false) == LogicalOpKind::kUEven);
  CHECK(encoding_op_for(true, true) == LogicalOpKind::kVEven);
  for (int m1 = 0; m1 < 2; ++m1) {
    for (int m2 = 0; m2 < 2; ++m2) {
      const LogicalState image = code.apply_logical(
          encoding_op_for(m1 != 0, m2 != 0), 0, LogicalState::zero(1));
      const BitVec bits = logical_bell_readout(image);
      CHECK(bits == BitVec{static_cast<std::uint8_t>(m1),
                           static_cast<std::uint8_t>(m2)});
    }
  }
}

TEST_CASE("pair error and pauli string conversions round trip") {
  RandomStream rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<PairError> errors(4);
    for (auto& e : errors) {
      e.home = kPaulis[rng.uniform_below(4)];
      e.flying = kPaulis[rng.uniform_below(4)];
    }
    const PauliString s = to_pauli_string(errors);
    CHECK(s.size() == 8);
    CHECK(pair_errors_of(s) == errors);
  }
  const std::vector<PairError> one = {PairError{kPauliX, kPauliZ}};
  CHECK(to_pauli_string(one).str() == "XZ");
}

TEST_CASE("labels_of reflects per-pair flips") {
  const auto labels = labels_of(flying_pattern(kPauliX, kPauliI, kPauliY));
  CHECK(labels[0] == kBellPsiPlus);
  CHECK(labels[1] == kBellPhiPlus);
  CHECK(labels[2] == kBellPsiMinus);
}

TEST_CASE("one concatenation round cleans single errors per group") {
  std::vector<PairError> pairs(6);
  pairs[1].flying = kPauliX;  // group 0: one bit flip -> corrected
  pairs[3].flying = kPauliZ;  // group 1: one phase flip -> corrected
  ConcatRoundStats stats;
  const auto out = simulate_concat_round(pairs, &stats);
  REQUIRE(out.size() == 2);
  CHECK(out[0].is_identity());
  CHECK(out[1].is_identity());
  CHECK(stats.groups == 2);
  CHECK(stats.nonzero_syndromes == 2);
  CHECK(stats.correction_statuses[static_cast<std::size_t>(
            CorrectionStatus::kCorrected)] == 2);
}

TEST_CASE("one concatenation round promotes double errors to logical ones") {
  std::vector<PairError> pairs(3);
  pairs[0].flying = kPauliX;
  pairs[2].flying = kPauliX;
  const auto out = simulate_concat_round(pairs);
  REQUIRE(out.size() == 1);
  CHECK(out[0].flips_zz());
  CHECK_FALSE(out[0].flips_xx());
  CHECK_THROWS_AS(simulate_concat_round(std::vector<PairError>(4)),
                  std::invalid_argument);
}

TEST_CASE("concatenated rounds compose") {
  // Nine pairs, one bit flip in each group of three: every first-round
  // group corrects, so two rounds end clean.
  std::vector<PairError> pairs(9);
  pairs[0].flying = kPauliX;
  pairs[4].flying = kPauliX;
  pairs[8].flying = kPauliX;
  auto level = simulate_concat_round(pairs);
  level = simulate_concat_round(level);
  REQUIRE(level.size() == 1);
  CHECK(level[0].is_identity());
}

TEST_CASE("recursion map") {
  CHECK(recursion_q(0.0) == 0.0);
  CHECK(recursion_q(1.0) == 1.0);
  CHECK(recursion_q(0.5) == 0.5);  // fixed point, exact in floating point
  CHECK(recursion_q(0.3) == doctest::Approx(0.216));
  CHECK(recursion_q(0.1) == doctest::Approx(0.028));
  CHECK_THROWS_AS(recursion_q(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(recursion_q(1.1), std::invalid_argument);

  const auto iterates = iterate_recursion({3, 0.3});
  REQUIRE(iterates.size() == 3);
  CHECK(iterates[0] == doctest::Approx(0.216));
  CHECK(iterates[1] == doctest::Approx(0.11981260799999999));
  CHECK(iterates[2] == doctest::Approx(0.039625348505897412));
}

TEST_CASE("recursion brackets the one-half threshold") {
  // Below one half the iterates sink toward zero, above they rise toward
  // one; the gap from 0.5 widens monotonically on both sides.
  double lo = 0.45, hi = 0.55;
  for (int round = 0; round < 12; ++round) {
    const double lo_next = recursion_q(lo);
    const double hi_next = recursion_q(hi);
    CHECK(lo_next < lo);
    // The upper sequence saturates at its floating-point fixed point one
    // ulp shy of 1.0 within a few rounds; require strict growth until then.
    if (hi_next == hi) {
      CHECK(hi > 1.0 - 1e-12);
    } else {
      CHECK(hi_next > hi);
    }
    lo = lo_next;
    hi = hi_next;
  }
  CHECK(lo < 1e-6);
  CHECK(hi > 1.0 - 1e-6);
}

TEST_CASE("monte carlo concatenation tracks the recursion") {
  const double q0 = 0.25;
  RandomStream rng(1234);
  const std::size_t trials = 20000;
  std::size_t flipped = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<PairError> pairs(9);
    for (auto& p : pairs)
      p.flying = PauliOp{rng.bernoulli(q0), rng.bernoulli(q0)};
    auto level = simulate_concat_round(pairs);
    level = simulate_concat_round(level);
    flipped += level[0].flips_zz() ? 1 : 0;
  }
  const double expected = iterate_recursion({2, q0}).back();
  const double rate = static_cast<double>(flipped) / trials;
  const double se = std::sqrt(expected * (1 - expected) / trials);
  CHECK(std::abs(rate - expected) < 4 * se);
}

TEST_CASE("hamming lift corrects any single pair error") {
  const OnePartyCode code = OnePartyCode::lift(ClassicalCode::hamming7());
  CHECK(code.n_pairs() == 7);
  CHECK(code.k() == 4);
  for (std::size_t pair = 0; pair < 7; ++pair) {
    for (PauliOp e : {kPauliX, kPauliY, kPauliZ}) {
      std::vector<PairError> errors(7);
      errors[pair].flying = e;
      const Correction corr =
          code.decode_and_correct(code.extract_syndrome(errors));
      CHECK(corr.status == CorrectionStatus::kCorrected);
      for (const BellLabel& label : code.corrected_labels(errors, corr))
        CHECK(label == kBellPhiPlus);
    }
  }
}
