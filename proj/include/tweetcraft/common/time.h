#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace tweetcraft {

using Timestamp = std::chrono::sys_seconds;

// Accepts `YYYY-MM-DDTHH:MM:SS[.fraction](Z|+HH:MM|-HH:MM)`; fractional
// seconds are truncated. Throws ValidationError on anything else.
Timestamp parse_rfc3339(std::string_view text);

// Always renders UTC with a trailing `Z`.
std::string format_rfc3339(Timestamp t);

// Whole days elapsed from `from` to `to`, floored; negative if `to` < `from`.
long long days_between(Timestamp from, Timestamp to);

}  // namespace tweetcraft
