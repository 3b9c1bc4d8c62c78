#pragma once

// Executable security games: the Hyb2 transcript generator, the
// oracle-programming signer simulator, the unforgeability and anonymity
// games, and a forking-lemma rewinder that feeds the sigma extractor.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gaars/ars.hpp"
#include "gaars/oracle.hpp"

namespace gaars::games {

using Bytes = std::vector<std::uint8_t>;

// ---- Hyb2 -------------------------------------------------------------------

struct Hyb2Randomness {
  sigma::Challenge ch{1};
  std::vector<GroupElement> deltas;
  std::vector<GroupElement> delta_primes;
  GroupElement b;
  std::vector<std::size_t> tau;
  GroupElement r;               // e_open = r . E0
  std::vector<GroupElement> rs;  // gammas for ch = 4
};

sigma::Transcript hyb2_transcript_with(const GroupAction& action, const SetElement& e_m,
                                       std::span<const SetElement> ring, const sigma::Witness& witness,
                                       const Hyb2Randomness& randomness);

/// WitnessNotInRing when s matches no member.
sigma::Transcript hyb2_transcript(const GroupAction& action, const SetElement& e_m,
                                  std::span<const SetElement> ring, const GroupElement& s, Rng& rng);

// ---- simulated signing ------------------------------------------------------

/// t simulated sessions for pk_target; the oracle is programmed so that the
/// result verifies. OracleCollision when the slot was already answered.
ars::Signature simulate_sign(const GroupAction& action, const SetElement& mpk, std::span<const SetElement> ring,
                             std::span<const std::uint8_t> message, const SetElement& pk_target,
                             const ars::Params& params, ProgrammableOracle& oracle, Rng& rng);

// ---- unforgeability ---------------------------------------------------------

struct Forgery {
  std::vector<SetElement> ring;
  Bytes message;
  ars::Signature sig;
};

struct SignRecord {
  SetElement signer;
  std::vector<SetElement> ring;
  Bytes message;
  Bytes signature;  // canonical encoding
};

struct GameState {
  std::vector<ars::KeyPair> hon;
  std::set<SetElement> cor;
  std::vector<SignRecord> log;
};

/// What a forger may call. Out-of-contract calls throw ProtocolViolation.
class UfOracles {
 public:
  virtual ~UfOracles() = default;
  virtual const SetElement& mpk() const = 0;
  virtual std::vector<SetElement> honest_keys() const = 0;
  virtual ars::Signature sign(const SetElement& mpk, std::span<const SetElement> ring,
                              std::span<const std::uint8_t> message, const SetElement& signer) = 0;
  virtual GroupElement corrupt(const SetElement& pk) = 0;
  virtual ChallengeOracle& oracle() = 0;
};

using UfAdversary = std::function<std::optional<Forgery>(UfOracles&, Rng& tape)>;

struct UfOptions {
  /// Answer sign queries with simulate_sign instead of the secret key.
  bool simulate_signing = false;
  std::optional<ars::MasterKeyPair> master;
};

struct UfOutcome {
  bool win = false;
  bool fresh = false;
  bool verified = false;
  std::optional<Forgery> forgery;
  std::optional<SetElement> opened;
  GameState state;
};

UfOutcome run_unforgeability_game(const GroupAction& action, const UfAdversary& adversary, std::size_t n_h,
                                  const ars::Params& params, Rng& rng, const UfOptions& options = {});

// ---- anonymity --------------------------------------------------------------

/// Sign*: an honest signature under sk_b, or nullopt when the ring lacks
/// either challenge key.
using SignStar =
    std::function<std::optional<ars::Signature>(std::span<const SetElement> ring, std::span<const std::uint8_t> m)>;

/// Returns a guess for b. Only a harness for external distinguishers; the
/// game itself asserts nothing about their advantage.
using Distinguisher = std::function<int(const SetElement& mpk, const SignStar& sign, Rng& tape)>;

struct AnonymityOutcome {
  int bit = 0;
  int guess = 0;
  bool win = false;
};

AnonymityOutcome run_anonymity_game(const GroupAction& action, const Distinguisher& distinguisher,
                                    const ars::KeyPair& kp0, const ars::KeyPair& kp1, const ars::Params& params,
                                    Rng& rng);

// ---- forking ----------------------------------------------------------------

/// Deterministic given its tape and the oracle answers, so a rewind with the
/// same tape replays every query up to the fork point.
using ForkAdversary = std::function<std::optional<Forgery>(ChallengeOracle& oracle, Rng& tape)>;

struct ForkOptions {
  /// Oracle queries the adversary makes per run (Q).
  std::size_t queries = 1;
  /// Measured success rate; zero or less means "unknown", giving the cap.
  double epsilon = 1.0;
  std::size_t budget_constant = 8;
  std::size_t budget_cap = 1'000'000;
  std::uint64_t seed = 0;
};

std::size_t fork_budget(const ForkOptions& options, std::size_t t);

struct ForkResult {
  enum class Kind { extracted, soundness_violation };
  Kind kind = Kind::extracted;
  std::optional<SetElement> opened;  // majority opening of the forged signatures
  SetElement pk;                     // extracted key pair (Kind::extracted)
  GroupElement sk;
  std::size_t session = 0;
  sigma::Commitment com;
  std::array<sigma::Response, 4> responses;  // answers to challenges 1..4
  std::size_t critical_query = 0;
  std::size_t runs = 0;  // adversary executions, first run included
};

/// Honest signer that first signs `decoys` throwaway messages through the
/// oracle, then signs `message`; Q = decoys + 1.
ForkAdversary honest_signer_adversary(const GroupAction& action, const SetElement& mpk,
                                      std::vector<SetElement> ring, GroupElement sk, Bytes message,
                                      ars::Params params, std::size_t decoys);

/// Throws ForkBudgetExhausted or NoGoodSession.
ForkResult fork_and_extract(const GroupAction& action, const ForkAdversary& adversary, const ars::MasterKeyPair& master,
                            const ars::Params& params, const ForkOptions& options);

// ---- records ----------------------------------------------------------------

struct GameRecord {
  std::string game;
  std::size_t trial = 0;
  std::string outcome;
  std::size_t rewinds = 0;
};

std::string to_json_line(const GameRecord& record);
GameRecord parse_json_line(const std::string& line);

}  // namespace gaars::games
