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

#include "opqec/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace opqec {

BitVec bitvec_from_string(const std::string& s) {
  BitVec v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1')
      throw std::invalid_argument("bit string may contain only 0 and 1");
    v[i] = static_cast<std::uint8_t>(s[i] - '0');
  }
  return v;
}

std::string bitvec_to_string(const BitVec& v) {
  std::string s(v.size(), '0');
  for (std::size_t i = 0; i < v.size(); ++i) s[i] = v[i] ? '1' : '0';
  return s;
}

void xor_into(BitVec& dst, const BitVec& src) {
  if (dst.size() != src.size())
    throw std::invalid_argument("xor_into size mismatch");
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

std::size_t bitvec_weight(const BitVec& v) {
  std::size_t w = 0;
  for (std::uint8_t b : v) w += b;
  return w;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) return BitMatrix();
  BitMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_)
      throw std::invalid_argument("matrix rows differ in length");
    for (std::size_t c = 0; c < m.cols_; ++c) {
      if (rows[r][c] != '0' && rows[r][c] != '1')
        throw std::invalid_argument("matrix entries must be 0 or 1");
      m.set(r, c, static_cast<std::uint8_t>(rows[r][c] - '0'));
    }
  }
  return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

BitVec BitMatrix::row(std::size_t r) const {
  return BitVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void BitMatrix::xor_row_into(std::size_t r, BitVec& dst) const {
  if (dst.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) dst[c] ^= get(r, c);
}

BitVec BitMatrix::multiply(const BitVec& v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("matrix-vector size mismatch");
  BitVec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint8_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc ^= get(r, c) & v[c];
    out[r] = acc;
  }
  return out;
}

BitMatrix BitMatrix::multiply(const BitMatrix& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("matrix-matrix size mismatch");
  BitMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      for (std::size_t c = 0; c < other.cols_; ++c)
        out.data_[r * out.cols_ + c] ^= other.get(k, c);
    }
  }
  return out;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.set(c, r, get(r, c));
  return out;
}

namespace {

/// Gauss-Jordan elimination of `m`, mirroring every row operation onto
/// `companion` when it is non-null.  Returns the pivot columns.
std::vector<std::size_t> reduce(BitMatrix& m, BitMatrix* companion) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < m.cols() && next_row < m.rows(); ++col) {
    std::size_t pivot_row = next_row;
    while (pivot_row < m.rows() && !m.get(pivot_row, col)) ++pivot_row;
    if (pivot_row == m.rows()) continue;
    if (pivot_row != next_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        std::uint8_t t = m.get(next_row, c);
        m.set(next_row, c, m.get(pivot_row, c));
        m.set(pivot_row, c, t);
      }
      if (companion) {
        for (std::size_t c = 0; c < companion->cols(); ++c) {
          std::uint8_t t = companion->get(next_row, c);
          companion->set(next_row, c, companion->get(pivot_row, c));
          companion->set(pivot_row, c, t);
        }
      }
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == next_row || !m.get(r, col)) continue;
      for (std::size_t c = 0; c < m.cols(); ++c)
        m.set(r, c, m.get(r, c) ^ m.get(next_row, c));
      if (companion) {
        for (std::size_t c = 0; c < companion->cols(); ++c)
          companion->set(r, c, companion->get(r, c) ^ companion->get(next_row, c));
      }
    }
    pivots.push_back(col);
    ++next_row;
  }
  return pivots;
}

}  // namespace

std::size_t BitMatrix::rank() const {
  BitMatrix m = *this;
  return reduce(m, nullptr).size();
}

BitMatrix BitMatrix::nullspace() const {
  BitMatrix m = *this;
  const std::vector<std::size_t> pivots = reduce(m, nullptr);
  std::vector<std::uint8_t> is_pivot(cols_, 0);
  for (std::size_t p : pivots) is_pivot[p] = 1;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  BitMatrix basis(free_cols.size(), cols_);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    const std::size_t fc = free_cols[i];
    basis.set(i, fc, 1);
    for (std::size_t j = 0; j < pivots.size(); ++j)
      basis.set(i, pivots[j], m.get(j, fc));
  }
  return basis;
}

BitMatrix BitMatrix::right_inverse() const {
  BitMatrix m = *this;
  BitMatrix e = BitMatrix::identity(rows_);
  const std::vector<std::size_t> pivots = reduce(m, &e);
  if (pivots.size() != rows_)
    throw std::invalid_argument("right_inverse requires full row rank");
  BitMatrix p(cols_, rows_);
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t c = 0; c < rows_; ++c) p.set(pivots[j], c, e.get(j, c));
  return p;
}

}  // namespace opqec
