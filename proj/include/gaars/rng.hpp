#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace gaars {

/// Source of random bytes. Every randomized operation in the library takes
/// one explicitly; nothing reads ambient randomness.
class Rng {
 public:
  virtual ~Rng() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;

  std::uint64_t next_u64();
  /// Uniform in [0, bound) by rejection; bound must be non-zero.
  std::size_t uniform_index(std::size_t bound);
};

/// Operating-system randomness (libsodium's randombytes).
class SystemRng final : public Rng {
 public:
  SystemRng();
  void fill(std::span<std::uint8_t> out) override;
};

/// SHA-256 in counter mode keyed by a seed. Used for reproducible test runs
/// and for the per-session streams forked off a signing call.
class DeterministicRng final : public Rng {
 public:
  using Seed = std::array<std::uint8_t, 32>;

  explicit DeterministicRng(std::uint64_t seed);
  explicit DeterministicRng(std::span<const std::uint8_t> seed);
  DeterministicRng(const Seed& seed, std::uint64_t stream);

  void fill(std::span<std::uint8_t> out) override;

  /// Draws a fresh 32-byte seed from `parent`.
  static Seed draw_seed(Rng& parent);

 private:
  void refill();

  Seed key_{};
  std::uint64_t counter_ = 0;
  std::array<std::uint8_t, 32> block_{};
  std::size_t used_ = 32;
};

}  // namespace gaars
