#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tweetcraft {

// Base64 of the little-endian IEEE-754 bytes of `values`.
std::string encode_doubles(std::span<const double> values);
std::vector<double> decode_doubles(std::string_view base64);

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

}  // namespace tweetcraft
