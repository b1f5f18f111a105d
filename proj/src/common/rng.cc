#include "tweetcraft/common/rng.h"

namespace tweetcraft {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::string_view stage) {
  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
  for (unsigned char c : stage) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return splitmix64(master ^ splitmix64(h));
}

}  // namespace tweetcraft
