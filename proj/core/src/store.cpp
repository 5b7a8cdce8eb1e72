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

#include "plt/store.hpp"

#include <array>
#include <fstream>
#include <iterator>

#include "bytes.hpp"
#include "plt/error.hpp"

namespace plt {
namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'P', 'L', 'T', 'S'};

}  // namespace

MessageStore random_store(const PrimeField& field, std::size_t K, std::size_t N, Rng& rng) {
  FqMatrix x(field, K, N);
  for (std::size_t r = 0; r < K; ++r) {
    for (std::size_t c = 0; c < N; ++c) x.at(r, c) = rng.element(field);
  }
  return MessageStore{std::move(x)};
}

std::vector<std::uint8_t> encode_store(const MessageStore& store) {
  detail::ByteWriter w;
  w.bytes(kMagic);
  w.u8(kStoreVersion);
  w.u64(store.q());
  w.u32(static_cast<std::uint32_t>(store.K()));
  w.u32(static_cast<std::uint32_t>(store.N()));
  for (FieldElement e : store.X.data()) w.u64(e.value());
  return w.take();
}

MessageStore decode_store(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kMagic.size() || !std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw Error(ErrorCode::BadMagic, "not a message store file");
  }
  detail::ByteReader r(bytes.subspan(kMagic.size()));
  const auto truncated = [&] {
    return Error(ErrorCode::TruncatedFile,
                 "file ends at byte " + std::to_string(bytes.size()) + " inside the " +
                     (r.offset() + kMagic.size() < kStoreHeaderBytes ? "header" : "entries"));
  };
  const auto version = r.read(1);
  if (!version) throw truncated();
  if (*version != kStoreVersion) {
    throw Error(ErrorCode::VersionUnsupported, "store version " + std::to_string(*version));
  }
  const auto q = r.read(8);
  const auto k = q ? r.read(4) : std::nullopt;
  const auto n = k ? r.read(4) : std::nullopt;
  if (!n) throw truncated();
  if (*q > PrimeField::kMaxModulus || !is_prime(*q)) {
    throw Error(ErrorCode::EntryOutOfRange, "modulus " + std::to_string(*q) + " is not a supported prime");
  }
  const PrimeField field(*q);
  const std::uint64_t count = *k * *n;
  if (r.remaining() / 8 < count) throw truncated();
  if (r.remaining() != count * 8) {
    throw Error(ErrorCode::TruncatedFile, "unexpected trailing bytes after the entries");
  }
  FqMatrix x(field, *k, *n);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t v = *r.read(8);
    if (!field.contains(v)) {
      throw Error(ErrorCode::EntryOutOfRange, "entry " + std::to_string(i) + " = " + std::to_string(v) +
                                                  " is not below q");
    }
    x.at(i / *n, i % *n) = FieldElement(v);
  }
  return MessageStore{std::move(x)};
}

void store_save(const MessageStore& store, const std::string& path) {
  const auto bytes = encode_store(store);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::IoError, "short write to " + path);
}

MessageStore store_load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_store(bytes);
}

}  // namespace plt
