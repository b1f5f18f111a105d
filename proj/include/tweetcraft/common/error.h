#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tweetcraft {

// Input that violates a documented contract: malformed files, bad arguments,
// records failing their invariants. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation that failed on otherwise valid input (diverging optimizer,
// unreadable file). The CLI maps this to exit code 2.
class RuntimeFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-fatal finding reported alongside a result. `line` is 1-based, 0 when
// the finding is not tied to an input line.
struct Diagnostic {
  std::size_t line = 0;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

using Diagnostics = std::vector<Diagnostic>;

std::string to_string(const Diagnostic& d);

}  // namespace tweetcraft
