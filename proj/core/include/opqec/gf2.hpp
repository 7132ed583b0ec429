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

#ifndef OPQEC_GF2_HPP_
#define OPQEC_GF2_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace opqec {

/// Vector over GF(2); entries are 0 or 1.
using BitVec = std::vector<std::uint8_t>;

BitVec bitvec_from_string(const std::string& s);
std::string bitvec_to_string(const BitVec& v);
void xor_into(BitVec& dst, const BitVec& src);
std::size_t bitvec_weight(const BitVec& v);

/// Dense matrix over GF(2), row major.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  /// Rows given as strings of '0'/'1'; all must have equal length.
  static BitMatrix from_strings(const std::vector<std::string>& rows);
  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint8_t get(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint8_t v) {
    data_[r * cols_ + c] = v & 1;
  }

  BitVec row(std::size_t r) const;
  void xor_row_into(std::size_t r, BitVec& dst) const;

  /// A * v for a column vector v of length cols().
  BitVec multiply(const BitVec& v) const;
  BitMatrix multiply(const BitMatrix& other) const;
  BitMatrix transposed() const;

  std::size_t rank() const;

  /// Basis of {v : A v = 0}, one vector per row (may have zero rows).
  BitMatrix nullspace() const;

  /// For a full-row-rank k x n matrix G, an n x k matrix P with G P = I_k.
  /// Throws std::invalid_argument if G does not have full row rank.
  BitMatrix right_inverse() const;

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

}  // namespace opqec

#endif  // OPQEC_GF2_HPP_
