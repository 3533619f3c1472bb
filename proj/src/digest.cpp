#include "pick3d/digest.hpp"

#include <array>

namespace pick3d {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest_string(std::string_view bytes) {
  static const char* hex = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string out = "fnv1a64:";
  for (int i = 15; i >= 0; --i) out.push_back(hex[(h >> (4 * i)) & 0xF]);
  return out;
}

}  // namespace pick3d
