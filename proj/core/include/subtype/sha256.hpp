#pragma once

#include <string>
#include <string_view>

namespace subtype {

/// SHA-256 digest of `data`, lowercase hex.
std::string sha256_hex(std::string_view data);

}  // namespace subtype
