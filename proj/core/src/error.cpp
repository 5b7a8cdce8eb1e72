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

#include "plt/error.hpp"

#include <array>
#include <utility>

namespace plt {
namespace {

constexpr std::array<std::pair<ErrorCode, std::string_view>, 24> kNames{{
    {ErrorCode::InversionOfZero, "InversionOfZero"},
    {ErrorCode::NotPrime, "NotPrime"},
    {ErrorCode::ShapeError, "ShapeError"},
    {ErrorCode::IndexError, "IndexError"},
    {ErrorCode::DegenerateCauchy, "DegenerateCauchy"},
    {ErrorCode::BadGrsParameters, "BadGrsParameters"},
    {ErrorCode::CompletionFailed, "CompletionFailed"},
    {ErrorCode::RankError, "RankError"},
    {ErrorCode::FieldTooSmall, "FieldTooSmall"},
    {ErrorCode::BadShape, "BadShape"},
    {ErrorCode::AlignmentSingular, "AlignmentSingular"},
    {ErrorCode::RecoveryInconsistent, "RecoveryInconsistent"},
    {ErrorCode::TooLarge, "TooLarge"},
    {ErrorCode::BadMagic, "BadMagic"},
    {ErrorCode::VersionUnsupported, "VersionUnsupported"},
    {ErrorCode::TruncatedFile, "TruncatedFile"},
    {ErrorCode::EntryOutOfRange, "EntryOutOfRange"},
    {ErrorCode::MalformedPayload, "MalformedPayload"},
    {ErrorCode::ConnectionRefused, "ConnectionRefused"},
    {ErrorCode::FrameTooLarge, "FrameTooLarge"},
    {ErrorCode::IoError, "IoError"},
    {ErrorCode::ParseError, "ParseError"},
    {ErrorCode::InvalidDemand, "InvalidDemand"},
    {ErrorCode::ServerError, "ServerError"},
}};

}  // namespace

std::string_view to_string(ErrorCode code) {
  for (const auto& [c, name] : kNames) {
    if (c == code) return name;
  }
  return "Unknown";
}

std::optional<ErrorCode> error_code_from_string(std::string_view name) {
  for (const auto& [c, n] : kNames) {
    if (n == name) return c;
  }
  return std::nullopt;
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace plt
