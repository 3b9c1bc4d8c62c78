#include "gaars/oracle.hpp"

#include "gaars/codec.hpp"
#include "gaars/error.hpp"

namespace gaars {

ChallengeVector HashOracle::challenges(const GroupAction& action, std::span<const sigma::Commitment> coms,
                                       std::span<const std::uint8_t> message, std::size_t t) {
  return codec::derive_challenges(action, coms, message, t);
}

HashOracle& hash_oracle() noexcept {
  static HashOracle oracle;
  return oracle;
}

ProgrammableOracle::ProgrammableOracle(std::uint64_t seed) : rng_(seed) {}

ProgrammableOracle::Query ProgrammableOracle::make_query(const GroupAction& action,
                                                         std::span<const sigma::Commitment> coms,
                                                         std::span<const std::uint8_t> message,
                                                         std::size_t t) {
  codec::Writer w;
  w.u32(static_cast<std::uint32_t>(t)).raw(codec::hash_input_for_challenges(action, coms, message));
  return w.take();
}

ChallengeVector ProgrammableOracle::fresh(std::size_t t) {
  ChallengeVector out;
  out.reserve(t);
  for (std::size_t j = 0; j < t; ++j) out.emplace_back(static_cast<int>(rng_.uniform_index(4)) + 1);
  return out;
}

ChallengeVector ProgrammableOracle::challenges(const GroupAction& action,
                                               std::span<const sigma::Commitment> coms,
                                               std::span<const std::uint8_t> message, std::size_t t) {
  Query q = make_query(action, coms, message, t);
  if (auto it = tape_.find(q); it != tape_.end()) return it->second;
  ChallengeVector answer = fresh(t);
  tape_.emplace(q, answer);
  log_.push_back(std::move(q));
  return answer;
}

void ProgrammableOracle::program(const Query& q, ChallengeVector answer) {
  if (tape_.contains(q)) throw Error(Errc::oracle_collision, "oracle already answered this query");
  tape_.emplace(q, std::move(answer));
  log_.push_back(q);
}

std::optional<std::size_t> ProgrammableOracle::position(const Query& q) const {
  for (std::size_t i = 0; i < log_.size(); ++i) {
    if (log_[i] == q) return i;
  }
  return std::nullopt;
}

void ProgrammableOracle::fork(std::size_t keep, std::uint64_t reseed) {
  if (keep > log_.size()) throw Error(Errc::length_mismatch, "fork point beyond query log");
  for (std::size_t i = keep; i < log_.size(); ++i) tape_.erase(log_[i]);
  log_.resize(keep);
  fork_point_ = keep;
  rng_ = DeterministicRng(reseed);
}

}  // namespace gaars
