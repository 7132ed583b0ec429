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

#ifndef OPQEC_CLASSICAL_CODE_HPP_
#define OPQEC_CLASSICAL_CODE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "opqec/gf2.hpp"
#include "opqec/rng.hpp"

namespace opqec {

enum class DecodeStatus {
  /// The coset leader's weight is within the guaranteed radius t.
  kCorrected,
  /// The syndrome can only be explained by errors heavier than t; the
  /// returned leader is a best effort and may misidentify the error.
  kAmbiguous,
};

struct DecodeResult {
  BitVec error;
  DecodeStatus status = DecodeStatus::kCorrected;
};

/// Binary linear [n, k] code given by a parity-check matrix, with a
/// minimum-weight (coset leader) syndrome decoder.
///
/// Ties between equal-weight coset members are broken toward the
/// lexicographically least bit string, so decoding is deterministic.
class ClassicalCode {
 public:
  /// `t` is the guaranteed correction radius: every error of weight <= t is
  /// decoded exactly.  The constructor checks this by confirming that all
  /// such errors have distinct syndromes.
  ClassicalCode(std::string name, BitMatrix parity_check, std::size_t t);

  const std::string& name() const { return name_; }
  std::size_t n() const { return parity_check_.cols(); }
  std::size_t k() const { return generator_.rows(); }
  std::size_t t() const { return t_; }
  const BitMatrix& parity_check() const { return parity_check_; }
  const BitMatrix& generator() const { return generator_; }

  BitVec syndrome(const BitVec& error) const;
  DecodeResult decode(const BitVec& syndrome) const;

  /// Message (length k) to codeword (length n).
  BitVec encode(const BitVec& message) const;

  /// Message carried by a codeword; inverse of encode on codewords.
  BitVec message_of(const BitVec& codeword) const;

  /// [3, 1] repetition code, t = 1.
  static ClassicalCode repetition3();
  /// [7, 4] Hamming code, t = 1.
  static ClassicalCode hamming7();

 private:
  std::size_t syndrome_index(const BitVec& s) const;
  BitVec search_leader(const BitVec& s) const;

  std::string name_;
  BitMatrix parity_check_;
  BitMatrix generator_;
  BitMatrix message_extract_;  // k x n, message_of = extract * codeword
  std::size_t t_;
  // Coset leader per syndrome index, present when n is small enough to
  // tabulate; otherwise decode() searches on demand.
  std::vector<BitVec> leader_table_;
};

/// Reads a code definition from a JSON file of the form
///   {"name": "...", "n": 7, "k": 4, "t": 1,
///    "pchk": ["1010101", "0110011", "0001111"]}
/// and cross-checks the declared n, k against the matrix.
/// Throws ConfigError on malformed or inconsistent input.
ClassicalCode load_code_definition(const std::string& path);

/// Random [n, k] code: a uniformly random full-row-rank parity check, with
/// the correction radius set to the largest t the draw actually guarantees
/// (which may be 0).
ClassicalCode random_code(std::size_t n, std::size_t k, RandomStream& rng);

/// Binary entropy in bits; H(0) = H(1) = 0 by continuity.
double binary_entropy(double x);

/// Gilbert-Varshamov feasibility report for relative radius t/n and
/// rate k/n.
struct GvReport {
  double rate = 0.0;      // k/n
  double radius = 0.0;    // t/n
  double slack = 0.0;     // 1 - H(t/n) - k/n
  bool feasible = false;  // 1 - H(t/n) > 0
};

/// Throws std::invalid_argument unless both arguments are in [0, 1].
GvReport gv_report(double t_over_n, double k_over_n);

}  // namespace opqec

#endif  // OPQEC_CLASSICAL_CODE_HPP_
