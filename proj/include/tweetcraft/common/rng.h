#pragma once

#include <cstdint>
#include <string_view>

namespace tweetcraft {

// Per-stage seed derived from the run's master seed, so that one seed governs
// every stochastic stage while stages stay independent of each other.
std::uint64_t derive_seed(std::uint64_t master, std::string_view stage);

}  // namespace tweetcraft
