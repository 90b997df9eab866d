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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "goced/time.hpp"

namespace goced {

/// Opaque identifier, non-empty and unique across all elements of one graph.
struct EntityId {
  std::string value;

  auto operator<=>(const EntityId&) const = default;
};

/// Attribute values are flat scalars; nesting is deliberately unsupported.
/// Integers and floating-point numbers are distinct scalars so that ingested
/// lexical forms survive serialization round trips.
using Scalar = std::variant<bool, std::int64_t, double, std::string>;

enum class SortalCategory { Kind, Phase, Role, Unspecified };
enum class EndurantCategory { Object, Quality, Relator };
enum class E2OKind { Created, Terminated, Participated };
enum class E2EKind { ProperPartOf, HistoricallyDependsOn };
enum class QvasLinkKind { BroughtAbout, ContributedToTrigger };

const char* to_string(SortalCategory s) noexcept;
const char* to_string(EndurantCategory c) noexcept;
const char* to_string(E2OKind k) noexcept;
const char* to_string(E2EKind k) noexcept;
const char* to_string(QvasLinkKind k) noexcept;

/// A type of time-persistent individuals. The sortal category records
/// whether the type necessarily classifies its instances (Kind) or applies
/// only contingently (Phase, Role).
struct EndurantType {
  EntityId id;
  std::string name;
  SortalCategory sortal = SortalCategory::Unspecified;

  friend bool operator==(const EndurantType&, const EndurantType&) = default;
};

struct EventType {
  EntityId id;
  std::string name;

  friend bool operator==(const EventType&, const EventType&) = default;
};

/// A time-persistent individual. Exactly one of three categories:
///  - Object: independent individual; inheres_in absent, mediates empty.
///  - Quality: intrinsic aspect inhering in exactly one non-Quality host;
///    may carry a static value when it does not vary over time.
///  - Relator: reified relationship mediating two or more endurants
///    (configurable down to one for anadyc data).
struct Endurant {
  EntityId id;
  EntityId type_ref;
  EndurantCategory category = EndurantCategory::Object;
  std::optional<std::string> label;
  std::optional<TimeInterval> existence;
  std::optional<EntityId> inheres_in;
  std::vector<EntityId> mediates;  // kept sorted and unique by the graph
  std::optional<Scalar> static_value;

  friend bool operator==(const Endurant&, const Endurant&) = default;
};

/// Quality value attribution: the state of a quality holding `value`
/// throughout the half-open interval `validity`.
struct Qvas {
  EntityId id;
  EntityId quality_ref;
  Scalar value;
  TimeInterval validity;

  friend bool operator==(const Qvas&, const Qvas&) = default;
};

/// An occurrent with a closed time interval (end is mandatory; insertion
/// rejects open event intervals). Attributes are static after insertion.
struct Event {
  EntityId id;
  EntityId type_ref;
  TimeInterval interval;
  std::map<std::string, Scalar> attributes;

  friend bool operator==(const Event&, const Event&) = default;
};

struct E2OLink {
  EntityId event;
  EntityId endurant;
  E2OKind kind = E2OKind::Participated;

  auto operator<=>(const E2OLink&) const = default;
};

/// source ProperPartOf target: source is a proper part of event target.
/// source HistoricallyDependsOn target: source depends on target.
struct E2ELink {
  EntityId source;
  EntityId target;
  E2EKind kind = E2EKind::ProperPartOf;

  auto operator<=>(const E2ELink&) const = default;
};

struct QvasEventLink {
  EntityId event;
  EntityId qvas;
  QvasLinkKind kind = QvasLinkKind::BroughtAbout;

  auto operator<=>(const QvasEventLink&) const = default;
};

}  // namespace goced
