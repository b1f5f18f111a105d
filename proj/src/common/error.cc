#include "tweetcraft/common/error.h"

namespace tweetcraft {

std::string to_string(const Diagnostic& d) {
  if (d.line == 0) return d.message;
  return "line " + std::to_string(d.line) + ": " + d.message;
}

}  // namespace tweetcraft
