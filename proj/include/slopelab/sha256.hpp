#pragma once

#include <cstdint>
#include <string>

namespace slopelab {

/// Hex digest of the SHA-256 hash of `data`.  Used for content-addressed
/// cache file names.
std::string sha256_hex(const std::string& data);

} // namespace slopelab
