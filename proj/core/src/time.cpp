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
#include "goced/time.hpp"

#include <cstdio>
#include <ctime>

#include "goced/error.hpp"

namespace goced {

namespace {

[[noreturn]] void bad_time(std::string_view text, const char* reason) {
  throw GocedError(Errc::SyntaxError,
                   "invalid timestamp \"" + std::string(text) + "\": " + reason);
}

bool read_digits(std::string_view s, std::size_t& pos, int count, int& out) {
  long value = 0;
  for (int i = 0; i < count; ++i) {
    if (pos >= s.size() || s[pos] < '0' || s[pos] > '9') return false;
    value = value * 10 + (s[pos] - '0');
    ++pos;
  }
  out = static_cast<int>(value);
  return true;
}

bool expect(std::string_view s, std::size_t& pos, char c) {
  if (pos >= s.size() || s[pos] != c) return false;
  ++pos;
  return true;
}

}  // namespace

TimePoint parse_time_point(std::string_view text) {
  std::size_t pos = 0;
  int year, month, day, hour, minute, second;
  if (!read_digits(text, pos, 4, year)) bad_time(text, "expected year");
  if (!expect(text, pos, '-')) bad_time(text, "expected '-' after year");
  if (!read_digits(text, pos, 2, month)) bad_time(text, "expected month");
  if (!expect(text, pos, '-')) bad_time(text, "expected '-' after month");
  if (!read_digits(text, pos, 2, day)) bad_time(text, "expected day");
  if (pos >= text.size() || (text[pos] != 'T' && text[pos] != 't' && text[pos] != ' '))
    bad_time(text, "expected 'T' date/time separator");
  ++pos;
  if (!read_digits(text, pos, 2, hour)) bad_time(text, "expected hour");
  if (!expect(text, pos, ':')) bad_time(text, "expected ':' after hour");
  if (!read_digits(text, pos, 2, minute)) bad_time(text, "expected minute");
  if (!expect(text, pos, ':')) bad_time(text, "expected ':' after minute");
  if (!read_digits(text, pos, 2, second)) bad_time(text, "expected second");

  if (month < 1 || month > 12) bad_time(text, "month out of range");
  if (day < 1 || day > 31) bad_time(text, "day out of range");
  if (hour > 23) bad_time(text, "hour out of range");
  if (minute > 59) bad_time(text, "minute out of range");
  if (second > 60) bad_time(text, "second out of range");

  int millis = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    int digits = 0;
    long frac = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (digits < 3) frac = frac * 10 + (text[pos] - '0');
      ++digits;
      ++pos;
    }
    if (digits == 0) bad_time(text, "empty fractional seconds");
    while (digits < 3) {
      frac *= 10;
      ++digits;
    }
    millis = static_cast<int>(frac);
  }

  long offset_minutes = 0;
  if (pos < text.size()) {
    char c = text[pos];
    if (c == 'Z' || c == 'z') {
      ++pos;
    } else if (c == '+' || c == '-') {
      ++pos;
      int oh, om = 0;
      if (!read_digits(text, pos, 2, oh)) bad_time(text, "expected offset hours");
      if (pos < text.size() && text[pos] == ':') ++pos;
      if (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        if (!read_digits(text, pos, 2, om)) bad_time(text, "expected offset minutes");
      }
      offset_minutes = oh * 60L + om;
      if (c == '-') offset_minutes = -offset_minutes;
    } else {
      bad_time(text, "unexpected trailing characters");
    }
  }
  if (pos != text.size()) bad_time(text, "unexpected trailing characters");

  std::tm tm{};
  tm.tm_year = year - 1900;
  tm.tm_mon = month - 1;
  tm.tm_mday = day;
  tm.tm_hour = hour;
  tm.tm_min = minute;
  tm.tm_sec = second;
  errno = 0;
  std::time_t secs = timegm(&tm);
  if (secs == static_cast<std::time_t>(-1) && errno != 0)
    bad_time(text, "not representable");
  // timegm normalizes; reject inputs it had to fix up (e.g. Feb 30).
  if (tm.tm_mday != day || tm.tm_mon != month - 1 || tm.tm_year != year - 1900)
    bad_time(text, "no such calendar day");

  std::int64_t total =
      static_cast<std::int64_t>(secs) * 1000 + millis - offset_minutes * 60'000;
  return TimePoint{total};
}

std::string format_time_point(TimePoint tp) {
  std::int64_t ms = tp.millis % 1000;
  std::int64_t secs = tp.millis / 1000;
  if (ms < 0) {
    ms += 1000;
    secs -= 1;
  }
  std::time_t t = static_cast<std::time_t>(secs);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec, static_cast<int>(ms));
  return buf;
}

}  // namespace goced
