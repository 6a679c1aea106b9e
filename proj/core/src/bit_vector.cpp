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

#include "distill/bit_vector.hpp"

#include <stdexcept>

namespace distill {

BitVector::BitVector(std::size_t size) : size_(size) {
  if (size > kMaxBits) {
    throw std::length_error("BitVector: length " + std::to_string(size) + " exceeds " +
                            std::to_string(kMaxBits) + " bits");
  }
}

BitVector BitVector::from_word(std::size_t size, std::uint64_t word) {
  BitVector v(size);
  if ((word & ~low_mask(size)) != 0) {
    throw std::invalid_argument("BitVector: word has bits beyond length " +
                                std::to_string(size));
  }
  v.word_ = word;
  return v;
}

BitVector BitVector::from_string(std::string_view text) {
  BitVector v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      v.set(i);
    } else if (text[i] != '0') {
      throw std::invalid_argument("BitVector: invalid character '" + std::string(1, text[i]) +
                                  "' in bit string \"" + std::string(text) + "\"");
    }
  }
  return v;
}

BitVector BitVector::unit(std::size_t size, std::size_t position) {
  BitVector v(size);
  v.set(position);
  return v;
}

bool BitVector::test(std::size_t position) const {
  if (position >= size_) throw std::out_of_range("BitVector: position out of range");
  return (*this)[position];
}

void BitVector::set(std::size_t position, bool value) {
  if (position >= size_) throw std::out_of_range("BitVector: position out of range");
  const std::uint64_t bit = std::uint64_t{1} << shift(position);
  word_ = value ? (word_ | bit) : (word_ & ~bit);
}

void BitVector::flip(std::size_t position) {
  if (position >= size_) throw std::out_of_range("BitVector: position out of range");
  word_ ^= std::uint64_t{1} << shift(position);
}

bool BitVector::dot(const BitVector& other) const {
  require_same_size(other, "dot");
  return std::popcount(word_ & other.word_) & 1;
}

BitVector BitVector::slice(std::size_t first, std::size_t length) const {
  if (first + length > size_) throw std::out_of_range("BitVector: slice out of range");
  if (length == 0) return BitVector(0);
  return from_word(length, (word_ >> (size_ - first - length)) & low_mask(length));
}

BitVector BitVector::concat(const BitVector& tail) const {
  BitVector out(size_ + tail.size_);
  out.word_ = (tail.size_ == 64 ? 0 : word_ << tail.size_) | tail.word_;
  return out;
}

BitVector BitVector::swap_halves() const {
  if (size_ % 2 != 0) throw std::invalid_argument("BitVector: swap_halves needs even length");
  const std::size_t half = size_ / 2;
  const std::uint64_t mask = low_mask(half);
  return from_word(size_, ((word_ & mask) << half) | (word_ >> half));
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_size(other, "xor");
  word_ ^= other.word_;
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  require_same_size(other, "and");
  word_ &= other.word_;
  return *this;
}

std::string BitVector::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if ((*this)[i]) out[i] = '1';
  }
  return out;
}

void BitVector::require_same_size(const BitVector& other, const char* op) const {
  if (size_ != other.size_) {
    throw std::invalid_argument(std::string("BitVector: length mismatch in ") + op + " (" +
                                std::to_string(size_) + " vs " + std::to_string(other.size_) +
                                ")");
  }
}

}  // namespace distill
