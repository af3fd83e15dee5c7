// mmimo-sim: massive MIMO physical-layer simulation library
// Copyright (C) 2026 The mmimo-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace mmimo {

/// Base of every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI's structured diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define MMIMO_DEFINE_ERROR(Name, tag)                                   \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& message) : Error(tag, message) {}  \
  }

MMIMO_DEFINE_ERROR(DimensionError, "dimension");
MMIMO_DEFINE_ERROR(NumericError, "numeric");
MMIMO_DEFINE_ERROR(RankError, "rank");
MMIMO_DEFINE_ERROR(DomainError, "domain");
MMIMO_DEFINE_ERROR(GeometryError, "geometry");
MMIMO_DEFINE_ERROR(ParseError, "parse");
MMIMO_DEFINE_ERROR(CapacityError, "pilot-capacity");
MMIMO_DEFINE_ERROR(PayloadError, "zero-payload");
MMIMO_DEFINE_ERROR(EmptyServiceError, "empty-service");
MMIMO_DEFINE_ERROR(ConfigError, "config");
MMIMO_DEFINE_ERROR(IoError, "io");

#undef MMIMO_DEFINE_ERROR

}  // namespace mmimo
