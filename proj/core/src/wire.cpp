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

#include "plt/wire.hpp"

#include <string_view>

#include <nlohmann/json.hpp>

#include "bytes.hpp"
#include "plt/error.hpp"

namespace plt {
namespace {

[[noreturn]] void malformed(std::size_t offset, const std::string& what) {
  throw Error(ErrorCode::MalformedPayload, what + " at byte " + std::to_string(offset));
}

std::uint64_t need(detail::ByteReader& r, int width, const char* field) {
  const std::size_t at = r.offset();
  const auto v = r.read(width);
  if (!v) malformed(at, std::string("payload ends inside ") + field);
  return *v;
}

void expect_end(const detail::ByteReader& r) {
  if (r.remaining() != 0) malformed(r.offset(), std::to_string(r.remaining()) + " trailing bytes");
}

FqMatrix read_matrix(detail::ByteReader& r, const PrimeField& field, std::uint64_t rows,
                     std::uint64_t cols) {
  if (rows != 0 && cols > r.remaining() / 8 / rows) {
    malformed(r.offset(), "payload too short for a " + std::to_string(rows) + "x" +
                              std::to_string(cols) + " matrix");
  }
  FqMatrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t at = r.offset();
      const std::uint64_t v = need(r, 8, "matrix entries");
      if (!field.contains(v)) malformed(at, "entry " + std::to_string(v) + " not below q");
      m.at(i, j) = FieldElement(v);
    }
  }
  return m;
}

}  // namespace

std::vector<std::uint8_t> encode_frame(const Frame& frame) {
  if (frame.payload.size() + 1 > kMaxFrameBytes) {
    throw Error(ErrorCode::FrameTooLarge, "frame of " + std::to_string(frame.payload.size() + 1) +
                                              " bytes exceeds the 64 MiB cap");
  }
  detail::ByteWriter w;
  w.u32(static_cast<std::uint32_t>(frame.payload.size() + 1));
  w.u8(static_cast<std::uint8_t>(frame.kind));
  w.bytes(frame.payload);
  return w.take();
}

std::size_t frame_body_length(std::span<const std::uint8_t, 4> prefix) {
  detail::ByteReader r(prefix);
  const std::uint64_t len = *r.read(4);
  if (len == 0) throw Error(ErrorCode::MalformedPayload, "zero-length frame at byte 0");
  if (len > kMaxFrameBytes) {
    throw Error(ErrorCode::FrameTooLarge, "announced frame of " + std::to_string(len) + " bytes");
  }
  return static_cast<std::size_t>(len);
}

Frame decode_frame_body(std::span<const std::uint8_t> body) {
  if (body.empty()) throw Error(ErrorCode::MalformedPayload, "empty frame at byte 4");
  const auto kind = static_cast<FrameKind>(body[0]);
  if (kind != FrameKind::kQuery && kind != FrameKind::kAnswer && kind != FrameKind::kError) {
    throw Error(ErrorCode::MalformedPayload, "unknown frame kind at byte 4");
  }
  return Frame{kind, std::vector<std::uint8_t>(body.begin() + 1, body.end())};
}

std::vector<std::uint8_t> encode_query(const Query& query) {
  detail::ByteWriter w;
  w.u64(query.G.field().modulus());
  w.u32(static_cast<std::uint32_t>(query.G.cols()));
  w.u32(static_cast<std::uint32_t>(query.G.rows()));
  for (FieldElement e : query.G.data()) w.u64(e.value());
  for (std::size_t p : query.pi) w.u32(static_cast<std::uint32_t>(p + 1));
  return w.take();
}

Query decode_query(std::span<const std::uint8_t> payload) {
  detail::ByteReader r(payload);
  const std::uint64_t q = need(r, 8, "q");
  if (q > PrimeField::kMaxModulus || !is_prime(q)) malformed(0, "modulus is not a supported prime");
  const PrimeField field(q);
  const std::uint64_t k = need(r, 4, "K");
  const std::uint64_t rows = need(r, 4, "rows");
  FqMatrix g = read_matrix(r, field, rows, k);
  if (r.remaining() / 4 < k) malformed(r.offset(), "payload too short for the permutation");
  std::vector<std::size_t> pi(k);
  std::vector<bool> seen(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t at = r.offset();
    const std::uint64_t v = need(r, 4, "pi");
    if (v < 1 || v > k) malformed(at, "pi value " + std::to_string(v) + " outside [1, K]");
    if (seen[v - 1]) malformed(at, "pi value " + std::to_string(v) + " repeated");
    seen[v - 1] = true;
    pi[i] = static_cast<std::size_t>(v - 1);
  }
  expect_end(r);
  return Query{std::move(g), std::move(pi)};
}

std::vector<std::uint8_t> encode_answer(const Answer& answer) {
  detail::ByteWriter w;
  w.u32(static_cast<std::uint32_t>(answer.Y.rows()));
  w.u32(static_cast<std::uint32_t>(answer.Y.cols()));
  for (FieldElement e : answer.Y.data()) w.u64(e.value());
  return w.take();
}

Answer decode_answer(std::span<const std::uint8_t> payload, const PrimeField& field) {
  detail::ByteReader r(payload);
  const std::uint64_t rows = need(r, 4, "rows");
  const std::uint64_t cols = need(r, 4, "N");
  FqMatrix y = read_matrix(r, field, rows, cols);
  expect_end(r);
  return Answer{std::move(y)};
}

Frame error_frame(const std::string& code_and_message) {
  return Frame{FrameKind::kError, std::vector<std::uint8_t>(code_and_message.begin(), code_and_message.end())};
}

void raise_error_payload(std::span<const std::uint8_t> payload) {
  const std::string text(payload.begin(), payload.end());
  const auto colon = text.find(": ");
  if (colon != std::string::npos) {
    if (const auto code = error_code_from_string(std::string_view(text).substr(0, colon))) {
      throw Error(*code, text.substr(colon + 2));
    }
  }
  throw Error(ErrorCode::ServerError, text);
}

std::string query_to_json(const Query& query) {
  nlohmann::json g = nlohmann::json::array();
  for (std::size_t r = 0; r < query.G.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (FieldElement e : query.G.row(r)) row.push_back(e.value());
    g.push_back(std::move(row));
  }
  nlohmann::json pi = nlohmann::json::array();
  for (std::size_t p : query.pi) pi.push_back(p + 1);
  return nlohmann::json{{"q", query.G.field().modulus()}, {"K", query.G.cols()}, {"G", g}, {"pi", pi}}.dump();
}

std::string answer_to_json(const Answer& answer) {
  nlohmann::json y = nlohmann::json::array();
  for (std::size_t r = 0; r < answer.Y.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (FieldElement e : answer.Y.row(r)) row.push_back(e.value());
    y.push_back(std::move(row));
  }
  return nlohmann::json{{"rows", answer.Y.rows()}, {"N", answer.Y.cols()}, {"Y", y}}.dump();
}

}  // namespace plt
