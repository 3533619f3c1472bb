#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pick3d {

/// FNV-1a 64-bit over raw bytes; reports carry it as "fnv1a64:<hex>".
std::uint64_t fnv1a64(std::string_view bytes);

std::string digest_string(std::string_view bytes);

}  // namespace pick3d
