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
#include <optional>
#include <string>
#include <string_view>

namespace goced {

/// An instant on the global timeline, UTC, millisecond precision.
/// Totally ordered; the numeric value is milliseconds since the Unix epoch
/// and may be negative.
struct TimePoint {
  std::int64_t millis = 0;

  auto operator<=>(const TimePoint&) const = default;
};

/// Parses an ISO-8601 instant ("2024-01-10T09:00:00Z", fractional seconds up
/// to milliseconds, numeric offsets, 'T' or single space separator). A
/// missing offset is read as UTC. Sub-millisecond digits are truncated.
/// Throws GocedError(SyntaxError) on malformed input.
TimePoint parse_time_point(std::string_view text);

/// Canonical form: "YYYY-MM-DDTHH:MM:SS.mmmZ", always UTC, always three
/// fractional digits. parse_time_point(format_time_point(t)) == t.
std::string format_time_point(TimePoint tp);

/// A time interval. An absent end means open-ended (still ongoing).
/// Event intervals are closed at both ends; QVAS validity intervals are
/// interpreted half-open [begin, end) by every consumer.
struct TimeInterval {
  TimePoint begin{};
  std::optional<TimePoint> end{};

  bool closed() const { return end.has_value(); }
  bool degenerate() const { return end && *end == begin; }

  /// Half-open membership: begin <= t, and t < end when end is present.
  bool covers(TimePoint t) const {
    return begin <= t && (!end || t < *end);
  }

  friend bool operator==(const TimeInterval&, const TimeInterval&) = default;
};

inline TimeInterval closed_interval(TimePoint begin, TimePoint end) {
  return TimeInterval{begin, end};
}

inline TimeInterval open_interval(TimePoint begin) {
  return TimeInterval{begin, std::nullopt};
}

}  // namespace goced
