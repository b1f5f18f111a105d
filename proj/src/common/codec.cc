#include "tweetcraft/common/codec.h"

#include <openssl/evp.h>

#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <memory>

#include "tweetcraft/common/error.h"

namespace tweetcraft {

std::string encode_doubles(std::span<const double> values) {
  std::string bytes;
  bytes.reserve(values.size() * 8);
  for (double v : values) {
    auto bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) bytes.push_back(static_cast<char>((bits >> (8 * i)) & 0xffu));
  }
  std::string out(4 * ((bytes.size() + 2) / 3), '\0');
  int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                          reinterpret_cast<const unsigned char*>(bytes.data()),
                          static_cast<int>(bytes.size()));
  out.resize(static_cast<std::size_t>(n));
  return out;
}

std::vector<double> decode_doubles(std::string_view base64) {
  if (base64.size() % 4 != 0) throw ValidationError("base64 payload length is not a multiple of 4");
  std::string bytes(3 * base64.size() / 4, '\0');
  int n = EVP_DecodeBlock(reinterpret_cast<unsigned char*>(bytes.data()),
                          reinterpret_cast<const unsigned char*>(base64.data()),
                          static_cast<int>(base64.size()));
  if (n < 0) throw ValidationError("invalid base64 payload");
  // EVP_DecodeBlock counts padding bytes as output; strip them.
  std::size_t size = static_cast<std::size_t>(n);
  if (!base64.empty() && base64.back() == '=') --size;
  if (base64.size() >= 2 && base64[base64.size() - 2] == '=') --size;
  if (size % 8 != 0) throw ValidationError("base64 payload is not a whole number of float64 values");
  std::vector<double> values(size / 8);
  for (std::size_t k = 0; k < values.size(); ++k) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) {
      bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[8 * k + i])) << (8 * i);
    }
    values[k] = std::bit_cast<double>(bits);
  }
  return values;
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw RuntimeFailure("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RuntimeFailure("cannot read " + path.string());
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return sha256_hex(contents);
}

}  // namespace tweetcraft
