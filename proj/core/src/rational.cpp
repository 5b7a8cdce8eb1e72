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

#include "plt/rational.hpp"

#include <charconv>
#include <cstdlib>

#include "plt/combinatorics.hpp"
#include "plt/error.hpp"

namespace plt {

std::string to_fraction(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_decimal(const Rational& r, int digits) {
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = r.numerator() < 0;
  const auto num = static_cast<detail::uint128>(std::llabs(r.numerator()));
  const auto den = static_cast<detail::uint128>(r.denominator());
  const detail::uint128 scaled = (num * scale * 2 + den) / (den * 2);
  const auto whole = static_cast<std::uint64_t>(scaled / scale);
  const auto frac = static_cast<std::uint64_t>(scaled % scale);
  std::string out = (negative && scaled != 0 ? "-" : "") + std::to_string(whole);
  if (digits > 0) {
    std::string f = std::to_string(frac);
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash), text), den);
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_int(text, text));
  const std::string_view frac = text.substr(dot + 1);
  if (frac.size() > 15) throw Error(ErrorCode::ParseError, "too many decimals in '" + std::string(text) + "'");
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  const std::string_view head = text.substr(0, dot);
  const bool negative = !head.empty() && head.front() == '-';
  const std::int64_t whole = head.empty() || head == "-" ? 0 : parse_int(head, text);
  const std::int64_t part = frac.empty() ? 0 : parse_int(frac, text);
  if (part < 0) throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
  const std::int64_t magnitude = (whole < 0 ? -whole : whole) * scale + part;
  return Rational(negative ? -magnitude : magnitude, scale);
}

}  // namespace plt
