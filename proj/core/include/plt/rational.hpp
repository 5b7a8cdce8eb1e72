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

// Exact rationals for rates and posteriors.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace plt {

// Compare against Rational(...) rather than a bare int: with Boost 1.74 the
// mixed int/rational<int64_t> equality recurses without end.
using Rational = boost::rational<std::int64_t>;

// "p/q", or "p" when the denominator is 1.
std::string to_fraction(const Rational& r);

// Fixed-point rendering rounded half away from zero, e.g. 1/6 -> "0.166667".
std::string to_decimal(const Rational& r, int digits = 6);

// Accepts "p", "p/q" and finite decimals such as "0.6". Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace plt
