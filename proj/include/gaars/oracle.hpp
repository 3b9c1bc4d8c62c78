#pragma once

// Challenge oracles for the Fiat-Shamir step. Signing and verification ask an
// oracle for the challenge vector of (coms, m); the default one hashes, the
// programmable one backs the security games.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gaars/openable_sigma.hpp"
#include "gaars/rng.hpp"

namespace gaars {

using ChallengeVector = std::vector<sigma::Challenge>;

class ChallengeOracle {
 public:
  virtual ~ChallengeOracle() = default;
  virtual ChallengeVector challenges(const GroupAction& action, std::span<const sigma::Commitment> coms,
                                     std::span<const std::uint8_t> message, std::size_t t) = 0;
};

/// codec::derive_challenges.
class HashOracle final : public ChallengeOracle {
 public:
  ChallengeVector challenges(const GroupAction& action, std::span<const sigma::Commitment> coms,
                             std::span<const std::uint8_t> message, std::size_t t) override;
};

HashOracle& hash_oracle() noexcept;

/// Lazily sampled random function with programming and rewinding. Queries
/// are keyed by their canonical bytes (and t); unseen queries draw uniform
/// challenges from the tape.
class ProgrammableOracle final : public ChallengeOracle {
 public:
  using Query = std::vector<std::uint8_t>;

  explicit ProgrammableOracle(std::uint64_t seed);

  ChallengeVector challenges(const GroupAction& action, std::span<const sigma::Commitment> coms,
                             std::span<const std::uint8_t> message, std::size_t t) override;

  static Query make_query(const GroupAction& action, std::span<const sigma::Commitment> coms,
                          std::span<const std::uint8_t> message, std::size_t t);

  bool contains(const Query& q) const { return tape_.contains(q); }
  /// OracleCollision if q already has an answer.
  void program(const Query& q, ChallengeVector answer);

  /// Distinct queries in first-seen order, programmed ones included.
  const std::vector<Query>& log() const noexcept { return log_; }
  std::optional<std::size_t> position(const Query& q) const;
  const ChallengeVector& answer(std::size_t position) const { return tape_.at(log_.at(position)); }

  /// Keeps the first `keep` logged answers, forgets the rest and draws
  /// later answers from a fresh tape.
  void fork(std::size_t keep, std::uint64_t reseed);
  std::optional<std::size_t> fork_point() const noexcept { return fork_point_; }

 private:
  ChallengeVector fresh(std::size_t t);

  DeterministicRng rng_;
  std::map<Query, ChallengeVector> tape_;
  std::vector<Query> log_;
  std::optional<std::size_t> fork_point_;
};

}  // namespace gaars
