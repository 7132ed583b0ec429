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

#include "opqec/classical_code.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "json.hpp"
#include "opqec/errors.hpp"

namespace opqec {

namespace {

// Largest block/syndrome width for which the full coset-leader table is
// precomputed; beyond it decode() searches on demand.
constexpr std::size_t kTableBits = 22;

std::uint64_t lowest_weight_word(std::size_t w) {
  return w == 0 ? 0 : (std::uint64_t{1} << w) - 1;
}

// Next integer with the same popcount (Gosper).  Enumerating these in
// ascending order enumerates equal-weight patterns in lexicographic order
// of their bit strings (bit n-1-j of the word is position j).
std::uint64_t next_same_weight(std::uint64_t v) {
  const std::uint64_t c = v & (~v + 1);
  const std::uint64_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

BitVec word_to_bits(std::uint64_t v, std::size_t n) {
  BitVec e(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    e[j] = static_cast<std::uint8_t>((v >> (n - 1 - j)) & 1);
  return e;
}

}  // namespace

ClassicalCode::ClassicalCode(std::string name, BitMatrix parity_check, std::size_t t)
    : name_(std::move(name)), parity_check_(std::move(parity_check)), t_(t) {
  const std::size_t n = parity_check_.cols();
  if (n == 0 || n > 63)
    throw std::invalid_argument("code length must be in 1..63");
  if (parity_check_.rank() != parity_check_.rows())
    throw std::invalid_argument("parity check must have full row rank");
  generator_ = parity_check_.nullspace();
  if (generator_.rows() == 0)
    throw std::invalid_argument("parity check admits no codewords");
  message_extract_ = generator_.right_inverse().transposed();

  // The radius is guaranteed exactly when all errors of weight <= t have
  // distinct syndromes.
  std::unordered_set<std::size_t> seen;
  for (std::size_t w = 0; w <= t_; ++w) {
    if (w > n) break;
    std::uint64_t v = lowest_weight_word(w);
    const std::uint64_t end = w == 0 ? 0 : lowest_weight_word(w) << (n - w);
    while (true) {
      if (!seen.insert(syndrome_index(syndrome(word_to_bits(v, n)))).second)
        throw std::invalid_argument(
            "declared correction radius exceeds what the code corrects");
      if (w == 0 || v >= end) break;
      v = next_same_weight(v);
    }
  }

  if (n <= kTableBits && parity_check_.rows() <= kTableBits) {
    const std::size_t achievable = std::size_t{1} << (n - k());
    leader_table_.assign(std::size_t{1} << parity_check_.rows(), BitVec{});
    std::size_t filled = 0;
    for (std::size_t w = 0; w <= n && filled < achievable; ++w) {
      std::uint64_t v = lowest_weight_word(w);
      const std::uint64_t end = w == 0 ? 0 : lowest_weight_word(w) << (n - w);
      while (true) {
        const BitVec e = word_to_bits(v, n);
        // An empty slot marks vacancy; stored leaders always have size n.
        BitVec& slot = leader_table_[syndrome_index(syndrome(e))];
        if (slot.empty()) {
          slot = e;
          ++filled;
        }
        if (w == 0 || v >= end) break;
        v = next_same_weight(v);
      }
    }
  }
}

BitVec ClassicalCode::syndrome(const BitVec& error) const {
  return parity_check_.multiply(error);
}

std::size_t ClassicalCode::syndrome_index(const BitVec& s) const {
  std::size_t idx = 0;
  for (std::uint8_t b : s) idx = (idx << 1) | b;
  return idx;
}

BitVec ClassicalCode::search_leader(const BitVec& s) const {
  const std::size_t n = this->n();
  for (std::size_t w = 0; w <= n; ++w) {
    std::uint64_t v = lowest_weight_word(w);
    const std::uint64_t end = w == 0 ? 0 : lowest_weight_word(w) << (n - w);
    while (true) {
      BitVec e = word_to_bits(v, n);
      if (syndrome(e) == s) return e;
      if (w == 0 || v >= end) break;
      v = next_same_weight(v);
    }
  }
  throw std::invalid_argument("syndrome is not achievable by any error");
}

DecodeResult ClassicalCode::decode(const BitVec& s) const {
  if (s.size() != parity_check_.rows())
    throw std::invalid_argument("syndrome length mismatch");
  DecodeResult result;
  if (!leader_table_.empty()) {
    const BitVec& leader = leader_table_[syndrome_index(s)];
    if (leader.empty())
      throw std::invalid_argument("syndrome is not achievable by any error");
    result.error = leader;
  } else {
    result.error = search_leader(s);
  }
  result.status = bitvec_weight(result.error) <= t_ ? DecodeStatus::kCorrected
                                                    : DecodeStatus::kAmbiguous;
  return result;
}

BitVec ClassicalCode::encode(const BitVec& message) const {
  if (message.size() != k())
    throw std::invalid_argument("message length mismatch");
  return generator_.transposed().multiply(message);
}

BitVec ClassicalCode::message_of(const BitVec& codeword) const {
  if (codeword.size() != n())
    throw std::invalid_argument("codeword length mismatch");
  return message_extract_.multiply(codeword);
}

ClassicalCode ClassicalCode::repetition3() {
  return ClassicalCode("repetition3", BitMatrix::from_strings({"110", "011"}), 1);
}

ClassicalCode ClassicalCode::hamming7() {
  return ClassicalCode(
      "hamming7",
      BitMatrix::from_strings({"1010101", "0110011", "0001111"}), 1);
}

ClassicalCode load_code_definition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open code definition: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError("invalid JSON in " + path + ": " + e.what());
  }
  try {
    const std::string name = j.value("name", std::string("code"));
    const auto n = j.at("n").get<std::size_t>();
    const auto k = j.at("k").get<std::size_t>();
    const auto t = j.at("t").get<std::size_t>();
    const auto rows = j.at("pchk").get<std::vector<std::string>>();
    ClassicalCode code(name, BitMatrix::from_strings(rows), t);
    if (code.n() != n)
      throw ConfigError("declared n does not match parity check width");
    if (code.k() != k)
      throw ConfigError("declared k does not match parity check rank");
    return code;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("bad code definition in " + path + ": " + e.what());
  }
}

namespace {

// Largest w such that all errors of weight <= w have distinct syndromes.
std::size_t max_guaranteed_radius(const BitMatrix& pchk) {
  const std::size_t n = pchk.cols();
  std::unordered_set<std::size_t> seen;
  std::size_t radius = 0;
  for (std::size_t w = 0; w <= n; ++w) {
    std::uint64_t v = lowest_weight_word(w);
    const std::uint64_t end = w == 0 ? 0 : lowest_weight_word(w) << (n - w);
    while (true) {
      const BitVec s = pchk.multiply(word_to_bits(v, n));
      std::size_t idx = 0;
      for (std::uint8_t b : s) idx = (idx << 1) | b;
      if (!seen.insert(idx).second) return radius;
      if (w == 0 || v >= end) break;
      v = next_same_weight(v);
    }
    radius = w;
  }
  return radius;
}

}  // namespace

ClassicalCode random_code(std::size_t n, std::size_t k, RandomStream& rng) {
  if (k == 0 || k >= n || n > 63)
    throw std::invalid_argument("random_code requires 0 < k < n <= 63");
  const std::size_t r = n - k;
  while (true) {
    BitMatrix pchk(r, n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j)
        pchk.set(i, j, static_cast<std::uint8_t>(rng.next_bool()));
    if (pchk.rank() != r) continue;
    return ClassicalCode("random", pchk, max_guaranteed_radius(pchk));
  }
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument("binary_entropy argument outside [0,1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

GvReport gv_report(double t_over_n, double k_over_n) {
  if (!(t_over_n >= 0.0 && t_over_n <= 1.0) ||
      !(k_over_n >= 0.0 && k_over_n <= 1.0))
    throw std::invalid_argument("gv_report arguments must be in [0,1]");
  GvReport report;
  report.rate = k_over_n;
  report.radius = t_over_n;
  report.slack = 1.0 - binary_entropy(t_over_n) - k_over_n;
  report.feasible = 1.0 - binary_entropy(t_over_n) > 0.0;
  return report;
}

}  // namespace opqec
