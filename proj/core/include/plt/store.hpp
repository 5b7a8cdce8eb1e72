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

// Message store file: "PLTS", version 0x01, q (u64 LE), K (u32 LE),
// N (u32 LE), then K*N entries as u64 LE in row-major order.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "plt/matrix.hpp"
#include "plt/rng.hpp"

namespace plt {

inline constexpr std::uint8_t kStoreVersion = 0x01;
inline constexpr std::size_t kStoreHeaderBytes = 4 + 1 + 8 + 4 + 4;

struct MessageStore {
  FqMatrix X;  // K x N; the field is X.field()

  std::size_t K() const { return X.rows(); }
  std::size_t N() const { return X.cols(); }
  std::uint64_t q() const { return X.field().modulus(); }
};

MessageStore random_store(const PrimeField& field, std::size_t K, std::size_t N, Rng& rng);

std::vector<std::uint8_t> encode_store(const MessageStore& store);
// Throws BadMagic, VersionUnsupported, TruncatedFile or EntryOutOfRange.
MessageStore decode_store(std::span<const std::uint8_t> bytes);

// Throws IoError on filesystem failures, otherwise as decode_store.
void store_save(const MessageStore& store, const std::string& path);
MessageStore store_load(const std::string& path);

}  // namespace plt
