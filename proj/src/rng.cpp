#include "gaars/rng.hpp"

#include <sodium.h>

#include <cstring>
#include <limits>
#include <stdexcept>

#include "gaars/hash.hpp"

namespace gaars {

static_assert(sizeof(crypto_hash_sha256_state) <= 256);

void ensure_sodium() {
  static const bool ok = sodium_init() >= 0;
  if (!ok) throw std::runtime_error("libsodium initialisation failed");
}

Sha256::Sha256() {
  ensure_sodium();
  crypto_hash_sha256_init(reinterpret_cast<crypto_hash_sha256_state*>(state_.data()));
}

Sha256& Sha256::update(std::span<const std::uint8_t> data) {
  crypto_hash_sha256_update(reinterpret_cast<crypto_hash_sha256_state*>(state_.data()), data.data(),
                            data.size());
  return *this;
}

Sha256& Sha256::update_byte(std::uint8_t b) { return update(std::span(&b, 1)); }

Sha256& Sha256::update_u32(std::uint32_t v) {
  const std::uint8_t buf[4] = {std::uint8_t(v >> 24), std::uint8_t(v >> 16), std::uint8_t(v >> 8),
                               std::uint8_t(v)};
  return update(buf);
}

Sha256& Sha256::update_u64(std::uint64_t v) {
  std::uint8_t buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = std::uint8_t(v >> (56 - 8 * i));
  return update(buf);
}

Digest Sha256::finish() {
  Digest out;
  crypto_hash_sha256_final(reinterpret_cast<crypto_hash_sha256_state*>(state_.data()), out.data());
  return out;
}

Digest sha256(std::span<const std::uint8_t> data) { return Sha256().update(data).finish(); }

std::uint64_t Rng::next_u64() {
  std::uint8_t buf[8];
  fill(buf);
  std::uint64_t v = 0;
  for (auto b : buf) v = (v << 8) | b;
  return v;
}

std::size_t Rng::uniform_index(std::size_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_index: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t v = next_u64();
    if (v < limit) return static_cast<std::size_t>(v % bound);
  }
}

SystemRng::SystemRng() { ensure_sodium(); }

void SystemRng::fill(std::span<std::uint8_t> out) { randombytes_buf(out.data(), out.size()); }

DeterministicRng::DeterministicRng(std::uint64_t seed) {
  static constexpr std::uint8_t label[] = {'g', 'a', 'a', 'r', 's', '-', 's', 'e', 'e', 'd'};
  key_ = Sha256().update(label).update_u64(seed).finish();
}

DeterministicRng::DeterministicRng(std::span<const std::uint8_t> seed) { key_ = sha256(seed); }

DeterministicRng::DeterministicRng(const Seed& seed, std::uint64_t stream) {
  key_ = Sha256().update(seed).update_u64(stream).finish();
}

DeterministicRng::Seed DeterministicRng::draw_seed(Rng& parent) {
  Seed s;
  parent.fill(s);
  return s;
}

void DeterministicRng::refill() {
  block_ = Sha256().update(key_).update_u64(counter_++).finish();
  used_ = 0;
}

void DeterministicRng::fill(std::span<std::uint8_t> out) {
  std::size_t pos = 0;
  while (pos < out.size()) {
    if (used_ == block_.size()) refill();
    const std::size_t take = std::min(out.size() - pos, block_.size() - used_);
    std::memcpy(out.data() + pos, block_.data() + used_, take);
    pos += take;
    used_ += take;
  }
}

}  // namespace gaars
