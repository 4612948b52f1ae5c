// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/common/timestamp.hpp"

#include <fmt/format.h>

#include <charconv>

#include "esdp/common/error.hpp"

namespace esdp {

Timestamp now_utc() {
  return std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
}

std::string format_iso8601(Timestamp t) {
  using namespace std::chrono;
  const auto day = floor<days>(t);
  const year_month_day ymd{day};
  const hh_mm_ss hms{t - day};
  return fmt::format("{:04d}-{:02d}-{:02d}T{:02d}:{:02d}:{:02d}Z", static_cast<int>(ymd.year()),
                     static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()), hms.hours().count(),
                     hms.minutes().count(), hms.seconds().count());
}

namespace {

int read_field(std::string_view text, std::size_t pos, std::size_t width) {
  int value = 0;
  const char* first = text.data() + pos;
  const char* last = first + width;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || *first == '-' || *first == '+') {
    throw Error("malformed timestamp: " + std::string(text));
  }
  return value;
}

}  // namespace

Timestamp parse_iso8601(std::string_view text) {
  using namespace std::chrono;
  if (text.size() != 20 || text[4] != '-' || text[7] != '-' || text[10] != 'T' || text[13] != ':' ||
      text[16] != ':' || text[19] != 'Z') {
    throw Error("malformed timestamp: " + std::string(text));
  }
  const year_month_day ymd{year{read_field(text, 0, 4)},
                           month{static_cast<unsigned>(read_field(text, 5, 2))},
                           day{static_cast<unsigned>(read_field(text, 8, 2))}};
  const int h = read_field(text, 11, 2);
  const int m = read_field(text, 14, 2);
  const int s = read_field(text, 17, 2);
  if (!ymd.ok() || h > 23 || m > 59 || s > 59) {
    throw Error("timestamp out of range: " + std::string(text));
  }
  return sys_days{ymd} + hours{h} + minutes{m} + seconds{s};
}

}  // namespace esdp
