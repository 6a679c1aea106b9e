// Copyright 2026 The distill Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "distill/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace distill {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows, BitVector(cols)), cols_(cols) {}

BitMatrix BitMatrix::identity(std::size_t size) {
  BitMatrix out(size, size);
  for (std::size_t i = 0; i < size; ++i) out.rows_[i].set(i);
  return out;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw std::invalid_argument("BitMatrix: row length " + std::to_string(r.size()) +
                                  " does not match column count " + std::to_string(cols));
    }
  }
  BitMatrix out;
  out.rows_ = std::move(rows);
  out.cols_ = cols;
  return out;
}

BitMatrix BitMatrix::from_columns(std::span<const BitVector> columns, std::size_t rows) {
  BitMatrix out(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) out.set_column(j, columns[j]);
  return out;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows) {
  if (rows.empty()) return BitMatrix();
  std::vector<BitVector> parsed;
  parsed.reserve(rows.size());
  for (const auto& r : rows) parsed.push_back(BitVector::from_string(r));
  const std::size_t cols = parsed.front().size();
  return from_rows(std::move(parsed), cols);
}

BitVector BitMatrix::column(std::size_t j) const {
  if (j >= cols_) throw std::out_of_range("BitMatrix: column out of range");
  BitVector out(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    if (rows_[i][j]) out.set(i);
  }
  return out;
}

void BitMatrix::set_row(std::size_t i, const BitVector& value) {
  if (value.size() != cols_) throw std::invalid_argument("BitMatrix: row length mismatch");
  rows_.at(i) = value;
}

void BitMatrix::set_column(std::size_t j, const BitVector& value) {
  if (value.size() != rows()) throw std::invalid_argument("BitMatrix: column length mismatch");
  for (std::size_t i = 0; i < rows(); ++i) rows_[i].set(j, value[i]);
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix out(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (rows_[i][j]) out.rows_[j].set(i);
    }
  }
  return out;
}

std::size_t BitMatrix::rank() const { return gf2::rank(rows_); }

BitMatrix operator*(const BitMatrix& lhs, const BitMatrix& rhs) {
  if (lhs.cols_ != rhs.rows()) {
    throw std::invalid_argument("BitMatrix: dimension mismatch in product");
  }
  BitMatrix out(lhs.rows(), rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    BitVector acc(rhs.cols_);
    const BitVector& r = lhs.rows_[i];
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      if (r[k]) acc ^= rhs.rows_[k];
    }
    out.rows_[i] = acc;
  }
  return out;
}

BitVector operator*(const BitMatrix& lhs, const BitVector& rhs) {
  if (lhs.cols_ != rhs.size()) {
    throw std::invalid_argument("BitMatrix: dimension mismatch in matrix-vector product");
  }
  BitVector out(lhs.rows());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    if (lhs.rows_[i].dot(rhs)) out.set(i);
  }
  return out;
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows());
  for (const auto& r : rows_) out.push_back(r.to_string());
  return out;
}

namespace gf2 {

std::size_t leading_position(const BitVector& v) {
  if (v.is_zero()) return v.size();
  return static_cast<std::size_t>(std::countl_zero(v.word())) - (64 - v.size());
}

std::vector<BitVector> reduced_echelon(std::span<const BitVector> vectors) {
  std::vector<BitVector> basis;
  for (BitVector v : vectors) {
    v = reduce(v, basis);
    if (v.is_zero()) continue;
    const std::size_t pivot = leading_position(v);
    // Clear the new pivot column from the existing rows.
    for (auto& b : basis) {
      if (b[pivot]) b ^= v;
    }
    auto at = std::lower_bound(basis.begin(), basis.end(), pivot,
                               [](const BitVector& b, std::size_t p) { return leading_position(b) < p; });
    basis.insert(at, v);
  }
  return basis;
}

std::size_t rank(std::span<const BitVector> vectors) { return reduced_echelon(vectors).size(); }

BitVector reduce(BitVector v, std::span<const BitVector> echelon_basis) {
  for (const auto& b : echelon_basis) {
    if (v[leading_position(b)]) v ^= b;
  }
  return v;
}

std::vector<BitVector> null_space(std::span<const BitVector> rows, std::size_t cols) {
  const auto echelon = reduced_echelon(rows);
  std::vector<bool> is_pivot(cols, false);
  for (const auto& r : echelon) is_pivot[leading_position(r)] = true;

  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    BitVector x = BitVector::unit(cols, free);
    for (const auto& r : echelon) {
      if (r[free]) x.set(leading_position(r));
    }
    basis.push_back(x);
  }
  return reduced_echelon(basis);
}

std::optional<BitVector> solve(std::span<const BitVector> rows, const BitVector& rhs,
                               std::size_t cols) {
  if (rhs.size() != rows.size()) {
    throw std::invalid_argument("gf2::solve: right-hand side length does not match row count");
  }
  std::vector<BitVector> augmented;
  augmented.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("gf2::solve: row length mismatch");
    BitVector rhs_bit(1);
    rhs_bit.set(0, rhs[i]);
    augmented.push_back(rows[i].concat(rhs_bit));
  }
  BitVector x(cols);
  for (const auto& r : reduced_echelon(augmented)) {
    const std::size_t pivot = leading_position(r);
    if (pivot == cols) return std::nullopt;
    if (r[cols]) x.set(pivot);
  }
  return reduce(x, null_space(rows, cols));
}

}  // namespace gf2
}  // namespace distill
