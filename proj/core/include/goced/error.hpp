/*
 * Copyright (C) 2026 The goced Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace goced {

/// Failure codes surfaced by graph construction, derivation, parsing and
/// serialization. Validation rule violations are data, not errors, and have
/// their own representation (see validation.hpp).
enum class Errc {
  DanglingReference,
  DuplicateId,
  InvariantViolation,
  UnknownId,
  NotARelator,
  NotAnObject,
  NotAQuality,
  OpenInterval,
  DegenerateInterval,
  CyclicDependence,
  AmbiguousValue,
  SyntaxError,
  SchemaError,
  MappingError,
  MissingColumn,
  InvalidBaseIri,
  UnsupportedConstruct,
};

const char* to_string(Errc code) noexcept;

class GocedError : public std::runtime_error {
 public:
  GocedError(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace goced
