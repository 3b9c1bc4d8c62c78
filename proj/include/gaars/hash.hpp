#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace gaars {

using Digest = std::array<std::uint8_t, 32>;

/// Incremental SHA-256 (FIPS 180-4), backed by libsodium.
class Sha256 {
 public:
  Sha256();
  Sha256& update(std::span<const std::uint8_t> data);
  Sha256& update_byte(std::uint8_t b);
  Sha256& update_u32(std::uint32_t v);  // big-endian
  Sha256& update_u64(std::uint64_t v);  // big-endian
  Digest finish();

 private:
  alignas(16) std::array<std::uint8_t, 256> state_{};
};

Digest sha256(std::span<const std::uint8_t> data);

void ensure_sodium();

}  // namespace gaars
