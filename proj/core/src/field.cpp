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

#include "plt/field.hpp"

#include <string>

#include "plt/error.hpp"

namespace plt {

std::ostream& operator<<(std::ostream& os, FieldElement e) { return os << e.value(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
  if (q > kMaxModulus || !is_prime(q)) {
    throw Error(ErrorCode::NotPrime, "field modulus " + std::to_string(q) +
                                         " is not a supported prime");
  }
}

FieldElement PrimeField::element(std::int64_t v) const {
  const auto q = static_cast<std::int64_t>(q_);
  std::int64_t r = v % q;
  if (r < 0) r += q;
  return FieldElement(static_cast<std::uint64_t>(r));
}

FieldElement PrimeField::add(FieldElement a, FieldElement b) const {
  std::uint64_t s = a.value() + b.value();
  return FieldElement(s >= q_ ? s - q_ : s);
}

FieldElement PrimeField::sub(FieldElement a, FieldElement b) const {
  return FieldElement(a.value() >= b.value() ? a.value() - b.value()
                                             : a.value() + q_ - b.value());
}

FieldElement PrimeField::mul(FieldElement a, FieldElement b) const {
  return FieldElement((a.value() * b.value()) % q_);
}

FieldElement PrimeField::neg(FieldElement a) const {
  return FieldElement(a.is_zero() ? 0 : q_ - a.value());
}

FieldElement PrimeField::pow(FieldElement a, std::uint64_t exponent) const {
  FieldElement result = one();
  FieldElement base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1U;
  }
  return result;
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a.is_zero()) throw Error(ErrorCode::InversionOfZero, "inverse of 0");
  // Extended Euclid on (a, q); q prime so gcd is 1.
  std::int64_t old_r = static_cast<std::int64_t>(a.value());
  std::int64_t r = static_cast<std::int64_t>(q_);
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  return element(old_s);
}

}  // namespace plt
