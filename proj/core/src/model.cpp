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
#include "goced/model.hpp"

#include "goced/error.hpp"

namespace goced {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DanglingReference: return "DanglingReference";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::UnknownId: return "UnknownId";
    case Errc::NotARelator: return "NotARelator";
    case Errc::NotAnObject: return "NotAnObject";
    case Errc::NotAQuality: return "NotAQuality";
    case Errc::OpenInterval: return "OpenInterval";
    case Errc::DegenerateInterval: return "DegenerateInterval";
    case Errc::CyclicDependence: return "CyclicDependence";
    case Errc::AmbiguousValue: return "AmbiguousValue";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::MappingError: return "MappingError";
    case Errc::MissingColumn: return "MissingColumn";
    case Errc::InvalidBaseIri: return "InvalidBaseIri";
    case Errc::UnsupportedConstruct: return "UnsupportedConstruct";
  }
  return "UnknownError";
}

const char* to_string(SortalCategory s) noexcept {
  switch (s) {
    case SortalCategory::Kind: return "kind";
    case SortalCategory::Phase: return "phase";
    case SortalCategory::Role: return "role";
    case SortalCategory::Unspecified: return "unspecified";
  }
  return "unspecified";
}

const char* to_string(EndurantCategory c) noexcept {
  switch (c) {
    case EndurantCategory::Object: return "object";
    case EndurantCategory::Quality: return "quality";
    case EndurantCategory::Relator: return "relator";
  }
  return "object";
}

const char* to_string(E2OKind k) noexcept {
  switch (k) {
    case E2OKind::Created: return "created";
    case E2OKind::Terminated: return "terminated";
    case E2OKind::Participated: return "participated";
  }
  return "participated";
}

const char* to_string(E2EKind k) noexcept {
  switch (k) {
    case E2EKind::ProperPartOf: return "proper-part-of";
    case E2EKind::HistoricallyDependsOn: return "historically-depends-on";
  }
  return "proper-part-of";
}

const char* to_string(QvasLinkKind k) noexcept {
  switch (k) {
    case QvasLinkKind::BroughtAbout: return "brought-about";
    case QvasLinkKind::ContributedToTrigger: return "contributed-to-trigger";
  }
  return "brought-about";
}

}  // namespace goced
