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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "distill/bit_vector.hpp"

namespace distill {

/// Dense GF(2) matrix stored as packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t size);
  static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols);
  static BitMatrix from_columns(std::span<const BitVector> columns, std::size_t rows);
  /// Rows given as bit strings, row-major.
  static BitMatrix from_strings(std::span<const std::string> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows() == cols_; }

  const BitVector& row(std::size_t i) const { return rows_.at(i); }
  BitVector column(std::size_t j) const;
  bool get(std::size_t i, std::size_t j) const { return rows_.at(i).test(j); }
  void set(std::size_t i, std::size_t j, bool value = true) { rows_.at(i).set(j, value); }
  void set_row(std::size_t i, const BitVector& value);
  void set_column(std::size_t j, const BitVector& value);
  std::span<const BitVector> row_span() const { return rows_; }

  BitMatrix transpose() const;
  std::size_t rank() const;

  friend BitMatrix operator*(const BitMatrix& lhs, const BitMatrix& rhs);
  friend BitVector operator*(const BitMatrix& lhs, const BitVector& rhs);

  std::vector<std::string> to_strings() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::vector<BitVector> rows_;
  std::size_t cols_ = 0;
};

namespace gf2 {

/// Position of the leftmost set bit, or `v.size()` for the zero vector.
std::size_t leading_position(const BitVector& v);

/// Nonzero rows of the reduced row echelon form of `vectors`, ordered by
/// ascending pivot (leftmost set bit). Each pivot column is zero in every
/// other row, so the result is a canonical basis of the span.
std::vector<BitVector> reduced_echelon(std::span<const BitVector> vectors);

std::size_t rank(std::span<const BitVector> vectors);

/// Minimal element of `v + span(basis)` where `basis` is in reduced echelon
/// form. This is the lexicographically smallest coset representative.
BitVector reduce(BitVector v, std::span<const BitVector> echelon_basis);

/// Canonical basis of {x : r·x = 0 for every r in `rows`} in GF(2)^cols.
std::vector<BitVector> null_space(std::span<const BitVector> rows, std::size_t cols);

/// Lexicographically smallest x with rows[i]·x = rhs[i] for every i, or
/// nullopt when the system is inconsistent.
std::optional<BitVector> solve(std::span<const BitVector> rows, const BitVector& rhs,
                               std::size_t cols);

}  // namespace gf2
}  // namespace distill
