#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace orbench {

/// SHA-256 digest of `data`, lowercase hexadecimal (64 chars).
std::string sha256_hex(std::string_view data);

}  // namespace orbench
