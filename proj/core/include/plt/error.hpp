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

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plt {

enum class ErrorCode {
  InversionOfZero,
  NotPrime,
  ShapeError,
  IndexError,
  DegenerateCauchy,
  BadGrsParameters,
  CompletionFailed,
  RankError,
  FieldTooSmall,
  BadShape,
  AlignmentSingular,
  RecoveryInconsistent,
  TooLarge,
  BadMagic,
  VersionUnsupported,
  TruncatedFile,
  EntryOutOfRange,
  MalformedPayload,
  ConnectionRefused,
  FrameTooLarge,
  IoError,
  ParseError,
  InvalidDemand,
  ServerError,
};

std::string_view to_string(ErrorCode code);
std::optional<ErrorCode> error_code_from_string(std::string_view name);

// All library failures surface as plt::Error. what() is "<Code>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace plt
