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

#include "plt/demand_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "plt/error.hpp"

namespace plt {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_number(std::string_view token, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ": expected a number, got '" + std::string(token) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

}  // namespace

Demand parse_demand(std::string_view text, const PrimeField& field, std::size_t K) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t number = 0;
  for (std::string_view rest = text; !rest.empty() || number == 0;) {
    const auto pos = rest.find('\n');
    ++number;
    const std::string_view line = trim(rest.substr(0, pos));
    if (!line.empty() && line.front() != '#') lines.emplace_back(number, line);
    if (pos == std::string_view::npos) break;
    rest.remove_prefix(pos + 1);
  }
  if (lines.empty() || lines[0].second.substr(0, 2) != "W:") {
    throw Error(ErrorCode::ParseError, "first line must be 'W: i1,...,iD'");
  }
  std::vector<std::size_t> w;
  for (std::string_view tok : split(lines[0].second.substr(2), ',')) {
    const std::uint64_t idx = parse_number(tok, lines[0].first);
    if (idx < 1) throw Error(ErrorCode::InvalidDemand, "indices are 1-based");
    if (!w.empty() && idx - 1 <= w.back()) {
      throw Error(ErrorCode::ParseError, "support indices must be strictly ascending");
    }
    w.push_back(static_cast<std::size_t>(idx - 1));
  }
  const std::size_t d = w.size();
  const std::size_t l = lines.size() - 1;
  std::vector<std::int64_t> entries;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    std::istringstream row{std::string(lines[r].second)};
    std::string tok;
    std::size_t count = 0;
    while (row >> tok) {
      const std::uint64_t v = parse_number(tok, lines[r].first);
      if (!field.contains(v)) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lines[r].first) + ": " + tok +
                                               " is not below q=" + std::to_string(field.modulus()));
      }
      entries.push_back(static_cast<std::int64_t>(v));
      ++count;
    }
    if (count != d) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lines[r].first) + ": expected " +
                                             std::to_string(d) + " coefficients, got " +
                                             std::to_string(count));
    }
  }
  if (l == 0) throw Error(ErrorCode::ParseError, "no coefficient rows");
  return Demand(std::move(w), FqMatrix(field, l, d, entries), K);
}

Demand read_demand_file(const std::string& path, const PrimeField& field, std::size_t K) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_demand(buf.str(), field, K);
}

std::string format_demand(const Demand& demand) {
  std::ostringstream out;
  out << "W: ";
  for (std::size_t j = 0; j < demand.D(); ++j) out << (j ? "," : "") << demand.W()[j] + 1;
  out << '\n';
  for (std::size_t r = 0; r < demand.L(); ++r) {
    for (std::size_t c = 0; c < demand.D(); ++c) out << (c ? " " : "") << demand.V()(r, c);
    out << '\n';
  }
  return out.str();
}

}  // namespace plt
