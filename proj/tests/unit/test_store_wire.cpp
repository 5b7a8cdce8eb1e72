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

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "plt/store.hpp"
#include "plt/wire.hpp"
#include "support.hpp"

namespace plt {
namespace {

using Bytes = std::vector<std::uint8_t>;
using testing::random_matrix;

const PrimeField kF17(17);

void append_le(Bytes& out, std::uint64_t v, int width) {
  for (int i = 0; i < width; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("plt_test_" + name);
}

TEST(Store, GoldenBytes) {
  const MessageStore s{FqMatrix::from_rows(kF17, {{3}, {16}})};
  const Bytes want{'P', 'L', 'T', 'S', 0x01,
                   17, 0, 0, 0, 0, 0, 0, 0,
                   2, 0, 0, 0,
                   1, 0, 0, 0,
                   3, 0, 0, 0, 0, 0, 0, 0,
                   16, 0, 0, 0, 0, 0, 0, 0};
  EXPECT_EQ(encode_store(s), want);
  EXPECT_EQ(decode_store(want).X, s.X);
}

TEST(Store, RoundTripAndFileSize) {
  Rng rng(40);
  const MessageStore s = random_store(kF17, 24, 4, rng);
  const auto path = temp_file("store.plts");
  store_save(s, path.string());
  EXPECT_EQ(std::filesystem::file_size(path), 4u + 1 + 8 + 4 + 4 + 24 * 4 * 8);
  const MessageStore back = store_load(path.string());
  EXPECT_EQ(back.X, s.X);
  EXPECT_EQ(encode_store(back), encode_store(s));
  std::filesystem::remove(path);

  for (int trial = 0; trial < 20; ++trial) {
    const PrimeField f(std::vector<std::uint64_t>{2, 17, 65537, PrimeField::kMaxModulus}[trial % 4]);
    const MessageStore r = random_store(f, 1 + rng.below(30), 1 + rng.below(5), rng);
    const Bytes bytes = encode_store(r);
    EXPECT_EQ(encode_store(decode_store(bytes)), bytes);
  }
}

TEST(Store, RejectsMalformedFiles) {
  Rng rng(41);
  const Bytes good = encode_store(random_store(kF17, 3, 2, rng));
  Bytes bad = good;
  bad[0] = 'X';
  EXPECT_PLT_ERROR(decode_store(bad), ErrorCode::BadMagic);
  bad = good;
  bad[4] = 0x02;
  EXPECT_PLT_ERROR(decode_store(bad), ErrorCode::VersionUnsupported);
  EXPECT_PLT_ERROR(decode_store(Bytes(good.begin(), good.end() - 1)), ErrorCode::TruncatedFile);
  EXPECT_PLT_ERROR(decode_store(Bytes(good.begin(), good.begin() + 10)), ErrorCode::TruncatedFile);
  bad = good;
  bad.push_back(0);
  EXPECT_PLT_ERROR(decode_store(bad), ErrorCode::TruncatedFile);
  bad = good;
  bad[kStoreHeaderBytes] = 17;
  for (int i = 1; i < 8; ++i) bad[kStoreHeaderBytes + i] = 0;
  EXPECT_PLT_ERROR(decode_store(bad), ErrorCode::EntryOutOfRange);
  bad = good;
  bad[5] = 15;
  EXPECT_PLT_ERROR(decode_store(bad), ErrorCode::EntryOutOfRange);
  EXPECT_PLT_ERROR(store_load(temp_file("does_not_exist").string()), ErrorCode::IoError);
}

TEST(Wire, GoldenQueryFrame) {
  const Query q{FqMatrix::from_rows(kF17, {{1, 2}}), {1, 0}};
  Bytes payload;
  append_le(payload, 17, 8);
  append_le(payload, 2, 4);
  append_le(payload, 1, 4);
  append_le(payload, 1, 8);
  append_le(payload, 2, 8);
  append_le(payload, 2, 4);
  append_le(payload, 1, 4);
  EXPECT_EQ(encode_query(q), payload);

  Bytes frame;
  append_le(frame, payload.size() + 1, 4);
  frame.push_back(0x01);
  frame.insert(frame.end(), payload.begin(), payload.end());
  EXPECT_EQ(encode_frame(Frame{FrameKind::kQuery, payload}), frame);

  const std::span<const std::uint8_t, 4> prefix(frame.data(), 4);
  EXPECT_EQ(frame_body_length(prefix), payload.size() + 1);
  const Frame back = decode_frame_body(std::span(frame).subspan(4));
  EXPECT_EQ(back.kind, FrameKind::kQuery);
  const Query decoded = decode_query(back.payload);
  EXPECT_EQ(decoded.G, q.G);
  EXPECT_EQ(decoded.pi, q.pi);
}

TEST(Wire, GoldenAnswerPayload) {
  const Answer a{FqMatrix::from_rows(kF17, {{5, 0}, {16, 1}})};
  Bytes payload;
  append_le(payload, 2, 4);
  append_le(payload, 2, 4);
  for (std::uint64_t v : {5, 0, 16, 1}) append_le(payload, v, 8);
  EXPECT_EQ(encode_answer(a), payload);
  EXPECT_EQ(decode_answer(payload, kF17).Y, a.Y);
}

TEST(Wire, PayloadSizeForNineByTwentyFour) {
  Rng rng(42);
  const Query q{random_matrix(kF17, 9, 24, rng), rng.permutation(24)};
  EXPECT_EQ(encode_query(q).size(), 8u + 4 + 4 + 9 * 24 * 8 + 24 * 4);
}

TEST(Wire, RandomRoundTrips) {
  Rng rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const PrimeField f(std::vector<std::uint64_t>{17, 65537, PrimeField::kMaxModulus}[trial % 3]);
    const std::size_t k = 1 + rng.below(30);
    const Query q{random_matrix(f, rng.below(10), k, rng), rng.permutation(k)};
    const Bytes bytes = encode_query(q);
    const Query back = decode_query(bytes);
    EXPECT_EQ(back.G, q.G);
    EXPECT_EQ(back.pi, q.pi);
    EXPECT_EQ(encode_query(back), bytes);
    const Answer a{random_matrix(f, rng.below(10), 1 + rng.below(4), rng)};
    EXPECT_EQ(decode_answer(encode_answer(a), f).Y, a.Y);
  }
}

TEST(Wire, MalformedPayloadsReportTheOffset) {
  const Query q{FqMatrix::from_rows(kF17, {{1, 2}}), {1, 0}};
  const Bytes good = encode_query(q);
  const auto message = [](const Bytes& b) {
    try {
      decode_query(b);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::MalformedPayload);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  Bytes dup = good;
  dup[good.size() - 4] = 2;  // pi = (2, 2)
  EXPECT_NE(message(dup).find("repeated at byte 36"), std::string::npos) << message(dup);
  Bytes range = good;
  range[good.size() - 8] = 3;
  EXPECT_NE(message(range).find("at byte 32"), std::string::npos) << message(range);
  EXPECT_NE(message(Bytes(good.begin(), good.begin() + 20)).find("at byte"), std::string::npos);
  Bytes entry = good;
  entry[16] = 17;
  EXPECT_NE(message(entry).find("at byte 16"), std::string::npos) << message(entry);
  Bytes modulus = good;
  modulus[0] = 16;
  EXPECT_NE(message(modulus).find("at byte 0"), std::string::npos);
  Bytes trailing = good;
  trailing.push_back(0);
  EXPECT_NE(message(trailing).find("at byte 40"), std::string::npos) << message(trailing);
}

TEST(Wire, FrameLimitsAndKinds) {
  const std::array<std::uint8_t, 4> huge{0x01, 0x00, 0x00, 0x04};  // 64 MiB + 1
  EXPECT_PLT_ERROR(frame_body_length(huge), ErrorCode::FrameTooLarge);
  const std::array<std::uint8_t, 4> cap{0x00, 0x00, 0x00, 0x04};
  EXPECT_EQ(frame_body_length(cap), kMaxFrameBytes);
  EXPECT_PLT_ERROR(frame_body_length(std::array<std::uint8_t, 4>{}), ErrorCode::MalformedPayload);
  EXPECT_PLT_ERROR(encode_frame(Frame{FrameKind::kAnswer, Bytes(kMaxFrameBytes)}), ErrorCode::FrameTooLarge);
  EXPECT_PLT_ERROR(decode_frame_body(Bytes{0x07}), ErrorCode::MalformedPayload);
  EXPECT_EQ(decode_frame_body(Bytes{0xFF, 'x'}).kind, FrameKind::kError);
}

TEST(Wire, ErrorPayloadsMapBackToCodes) {
  const Frame f = error_frame("ShapeError: query expects K=23 messages, store has 24");
  EXPECT_EQ(f.kind, FrameKind::kError);
  try {
    raise_error_payload(f.payload);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ShapeError);
    EXPECT_EQ(e.detail(), "query expects K=23 messages, store has 24");
  }
  const std::string odd = "something broke";
  EXPECT_PLT_ERROR(raise_error_payload(Bytes(odd.begin(), odd.end())), ErrorCode::ServerError);
}

TEST(Wire, JsonDebugEncoding) {
  const Query q{FqMatrix::from_rows(kF17, {{1, 2}}), {1, 0}};
  const std::string j = query_to_json(q);
  EXPECT_NE(j.find("\"q\":17"), std::string::npos) << j;
  EXPECT_NE(j.find("[2,1]"), std::string::npos) << j;
  EXPECT_NE(answer_to_json(Answer{FqMatrix::from_rows(kF17, {{4}})}).find("[[4]]"), std::string::npos);
}

}  // namespace
}  // namespace plt
