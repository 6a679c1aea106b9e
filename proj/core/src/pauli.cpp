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

#include "distill/pauli.hpp"

#include <stdexcept>

namespace distill {

BitVector parse_pauli_string(std::string_view text) {
  const std::size_t k = text.size();
  BitVector label(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    switch (text[i]) {
      case 'I': break;
      case 'X': label.set(k + i); break;
      case 'Z': label.set(i); break;
      case 'Y':
        label.set(i);
        label.set(k + i);
        break;
      default:
        throw std::invalid_argument("parse_pauli_string: invalid character '" + std::string(1, text[i]) +
                                    "' in \"" + std::string(text) + "\" (expected I, X, Y or Z)");
    }
  }
  return label;
}

std::string to_pauli_string(const BitVector& label) {
  if (label.size() % 2 != 0) throw std::invalid_argument("to_pauli_string: odd label length");
  const std::size_t k = label.size() / 2;
  static constexpr char kLetters[] = {'I', 'X', 'Z', 'Y'};
  std::string out(k, 'I');
  for (std::size_t i = 0; i < k; ++i) out[i] = kLetters[(label[i] << 1) | label[k + i]];
  return out;
}

}  // namespace distill
