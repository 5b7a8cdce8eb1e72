// Copyright 2026 The PLT Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Arithmetic in the prime field GF(q).
//
// A FieldElement is a bare residue; the modulus lives in the PrimeField
// that produced it. Mixing elements of different fields is a caller bug and
// is not detected here (FqMatrix checks field equality at its boundary).

#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace plt {

class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint64_t value) : value_(value) {}

  constexpr std::uint64_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint64_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, FieldElement e);

// Deterministic trial division; adequate for moduli below 2^32.
bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  // Largest accepted modulus. Keeps every product below 2^64.
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 32) - 5;

  // Throws Error(NotPrime) unless q is a prime not exceeding kMaxModulus.
  explicit PrimeField(std::uint64_t q);

  std::uint64_t modulus() const { return q_; }

  // Reduces any signed integer into [0, q).
  FieldElement element(std::int64_t v) const;
  // Reduces an unsigned integer into [0, q).
  FieldElement reduce(std::uint64_t v) const { return FieldElement(v % q_); }
  bool contains(std::uint64_t v) const { return v < q_; }

  FieldElement zero() const { return FieldElement(0); }
  FieldElement one() const { return FieldElement(1); }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t exponent) const;
  // Throws Error(InversionOfZero) for a == 0.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t q_;
};

}  // namespace plt
