#pragma once

// FNV-1a 64-bit content digests for manifests and config hashes.

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace boolcov {

inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(v));
  return std::string(buf, 16);
}

} // namespace boolcov
