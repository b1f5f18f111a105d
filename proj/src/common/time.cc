#include "tweetcraft/common/time.h"

#include <charconv>
#include <cstdio>

#include "tweetcraft/common/error.h"

namespace tweetcraft {
namespace {

int read_digits(std::string_view text, std::size_t pos, std::size_t count) {
  if (pos + count > text.size()) throw ValidationError("truncated timestamp: " + std::string(text));
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + pos + count, value);
  if (ec != std::errc() || ptr != text.data() + pos + count) {
    throw ValidationError("bad digits in timestamp: " + std::string(text));
  }
  return value;
}

void expect(std::string_view text, std::size_t pos, char c) {
  if (pos >= text.size() || text[pos] != c) {
    throw ValidationError("malformed timestamp: " + std::string(text));
  }
}

}  // namespace

Timestamp parse_rfc3339(std::string_view text) {
  using namespace std::chrono;
  int year = read_digits(text, 0, 4);
  expect(text, 4, '-');
  int month = read_digits(text, 5, 2);
  expect(text, 7, '-');
  int day = read_digits(text, 8, 2);
  if (text.size() <= 10 || (text[10] != 'T' && text[10] != 't' && text[10] != ' ')) {
    throw ValidationError("malformed timestamp: " + std::string(text));
  }
  int hour = read_digits(text, 11, 2);
  expect(text, 13, ':');
  int minute = read_digits(text, 14, 2);
  expect(text, 16, ':');
  int second = read_digits(text, 17, 2);
  std::size_t pos = 19;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) throw ValidationError("empty fraction in timestamp: " + std::string(text));
  }
  int offset_minutes = 0;
  if (pos < text.size() && (text[pos] == 'Z' || text[pos] == 'z')) {
    ++pos;
  } else if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    int sign = text[pos] == '-' ? -1 : 1;
    int oh = read_digits(text, pos + 1, 2);
    expect(text, pos + 3, ':');
    int om = read_digits(text, pos + 4, 2);
    if (oh > 23 || om > 59) throw ValidationError("bad UTC offset: " + std::string(text));
    offset_minutes = sign * (oh * 60 + om);
    pos += 6;
  } else {
    throw ValidationError("timestamp lacks a UTC designator: " + std::string(text));
  }
  if (pos != text.size()) throw ValidationError("trailing characters in timestamp: " + std::string(text));

  year_month_day ymd{std::chrono::year{year}, std::chrono::month{static_cast<unsigned>(month)},
                     std::chrono::day{static_cast<unsigned>(day)}};
  if (!ymd.ok() || hour > 23 || minute > 59 || second > 60) {
    throw ValidationError("timestamp out of range: " + std::string(text));
  }
  auto local = sys_days{ymd} + hours{hour} + minutes{minute} + seconds{second};
  return local - minutes{offset_minutes};
}

std::string format_rfc3339(Timestamp t) {
  using namespace std::chrono;
  auto day_point = floor<days>(t);
  year_month_day ymd{day_point};
  hh_mm_ss hms{t - day_point};
  char buf[80];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02ld:%02ld:%02lldZ", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<long>(hms.hours().count()), static_cast<long>(hms.minutes().count()),
                static_cast<long long>(hms.seconds().count()));
  return buf;
}

long long days_between(Timestamp from, Timestamp to) {
  return std::chrono::floor<std::chrono::days>(to - from).count();
}

}  // namespace tweetcraft
