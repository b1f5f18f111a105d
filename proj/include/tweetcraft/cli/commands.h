#pragma once

#include <iosfwd>

namespace tweetcraft::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitFailure = 2;

// Entry point of the `tweetcraft` binary, callable in-process. Output that
// the user asked for goes to `out`; usage text and errors go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tweetcraft::cli
