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

// Length-prefixed frames and the binary query/answer payloads.
//
// Frame: u32 LE length (= payload size + 1), one kind byte, payload.
// Query payload: q (u64), K (u32), rows (u32), G entries (u64 each,
// row-major), then pi as K u32 values, 1-based. Answer payload: rows (u32),
// N (u32), Y entries (u64 each). All integers little-endian.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "plt/query.hpp"

namespace plt {

enum class FrameKind : std::uint8_t {
  kQuery = 0x01,
  kAnswer = 0x02,
  kError = 0xFF,
};

inline constexpr std::size_t kMaxFrameBytes = std::size_t{64} << 20;

struct Frame {
  FrameKind kind;
  std::vector<std::uint8_t> payload;
};

// Throws FrameTooLarge beyond kMaxFrameBytes.
std::vector<std::uint8_t> encode_frame(const Frame& frame);

// Parses the 4-byte prefix; returns the number of bytes that follow it.
// Throws FrameTooLarge or MalformedPayload (zero length).
std::size_t frame_body_length(std::span<const std::uint8_t, 4> prefix);

// Splits a frame body (kind byte + payload). Throws MalformedPayload for an
// unknown kind.
Frame decode_frame_body(std::span<const std::uint8_t> body);

std::vector<std::uint8_t> encode_query(const Query& query);
std::vector<std::uint8_t> encode_answer(const Answer& answer);

// Both throw MalformedPayload naming the offending byte offset. The answer
// payload does not carry q, so the caller supplies the query's field.
Query decode_query(std::span<const std::uint8_t> payload);
Answer decode_answer(std::span<const std::uint8_t> payload, const PrimeField& field);

// Error frames carry "Code: message".
Frame error_frame(const std::string& code_and_message);
// Throws the Error described by an error payload (ServerError when the code
// is unknown).
[[noreturn]] void raise_error_payload(std::span<const std::uint8_t> payload);

// Human-readable JSON for debugging; indices shown 1-based as on the wire.
std::string query_to_json(const Query& query);
std::string answer_to_json(const Answer& answer);

}  // namespace plt
