// Copyright 2026 The powres Authors
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

#ifndef POWRES_FIELD_HPP_
#define POWRES_FIELD_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "powres/number_theory.hpp"

namespace powres {

/// An element of F_q, always kept in [0, q-1]. The modulus lives with the
/// container (matrix, subspace, point set), not with each scalar.
using Scalar = std::uint32_t;
using Vector = std::vector<Scalar>;

/// The prime field F_q for an odd prime q.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxOrder = (std::uint64_t{1} << 31) - 1;

  explicit PrimeField(std::uint64_t q) : q_(validate(q)) {}

  Scalar order() const noexcept { return q_; }

  /// Maps an arbitrary integer to its residue in [0, q-1].
  Scalar reduce(std::int64_t v) const noexcept {
    const std::int64_t r = v % static_cast<std::int64_t>(q_);
    return static_cast<Scalar>(r < 0 ? r + q_ : r);
  }

  Scalar add(Scalar a, Scalar b) const noexcept {
    const Scalar s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + q_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % q_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const noexcept {
    return static_cast<Scalar>(powmod(a, e, q_));
  }
  Scalar inv(Scalar a) const {
    if (a == 0) throw Error("F_" + std::to_string(q_) + ": zero has no inverse");
    return pow(a, q_ - 2);
  }

  bool is_valid(Scalar a) const noexcept { return a < q_; }

  /// Nonzero squares together with zero; (q+1)/2 elements, increasing.
  std::vector<Scalar> squares_with_zero() const {
    std::vector<bool> seen(q_, false);
    for (Scalar a = 0; a < q_; ++a) seen[mul(a, a)] = true;
    std::vector<Scalar> out;
    for (Scalar a = 0; a < q_; ++a) {
      if (seen[a]) out.push_back(a);
    }
    return out;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  static Scalar validate(std::uint64_t q) {
    if (q < 3 || q % 2 == 0 || q > kMaxOrder || !is_prime(q)) {
      throw Error("modulus q must be an odd prime, got " + std::to_string(q));
    }
    return static_cast<Scalar>(q);
  }

  Scalar q_;
};

}  // namespace powres

#endif  // POWRES_FIELD_HPP_
