#pragma once

// Openable OR-sigma protocol over a group action. A prover holding s with
// s.E0 = ring[k] convinces a verifier that it knows the secret of *some*
// ring member, while the commitment carries an opening tag (e_open) that
// the holder of a master secret s_m can map back to ring[k].
//
// Commitment layout, for masks D_i, D'_i, b and the prover's index k:
//   alphas[i] = D_i . ring[i]
//   betas[i]  = D'_i . alphas[i]
//   gammas    = permuted (b . betas[i])
//   e_open    = (D_k D'_k s) . E_m
//   e_check   = b . e_open
// Challenges 1..4 reveal D, D', b and l = D_k D'_k b s respectively.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "gaars/group_action.hpp"

namespace gaars::sigma {

struct Commitment {
  std::vector<SetElement> alphas;
  std::vector<SetElement> betas;
  std::vector<SetElement> gammas;  // already permuted
  SetElement e_open;
  SetElement e_check;

  std::size_t size() const noexcept { return betas.size(); }
  bool operator==(const Commitment&) const = default;
};

/// Prover secrets between commit and respond. Single owner; never share.
struct State {
  std::vector<GroupElement> deltas;
  std::vector<GroupElement> delta_primes;
  GroupElement b;
  GroupElement l;
  std::size_t k = 0;
  std::vector<std::size_t> tau;  // gammas[j] = b . betas[tau[j]]
};

class Challenge {
 public:
  /// Throws InvalidChallenge unless 1 <= value <= 4.
  explicit Challenge(int value);
  int value() const noexcept { return value_; }
  bool operator==(const Challenge&) const = default;

 private:
  int value_;
};

struct DeltasResponse {
  std::vector<GroupElement> values;
  bool operator==(const DeltasResponse&) const = default;
};
struct DeltaPrimesResponse {
  std::vector<GroupElement> values;
  bool operator==(const DeltaPrimesResponse&) const = default;
};
struct BResponse {
  GroupElement value;
  bool operator==(const BResponse&) const = default;
};
struct LResponse {
  GroupElement value;
  bool operator==(const LResponse&) const = default;
};

/// Alternative i answers challenge i+1.
using Response = std::variant<DeltasResponse, DeltaPrimesResponse, BResponse, LResponse>;

inline int response_challenge(const Response& r) noexcept { return static_cast<int>(r.index()) + 1; }

struct Transcript {
  Commitment com;
  Challenge ch{1};
  Response resp;
};

/// Index and secret of the prover's ring member.
struct Witness {
  std::size_t index;
  GroupElement secret;
};

/// Explicit commit randomness, for scripted runs and exhaustive enumeration.
struct CommitRandomness {
  std::vector<GroupElement> deltas;
  std::vector<GroupElement> delta_primes;
  GroupElement b;
  std::vector<std::size_t> tau;
};

/// Explicit simulator randomness. For ch = 1, `first` holds D_i and `second`
/// the auxiliary D_i; for ch in {2,3,4}, `first` holds the auxiliary D_i and
/// `second` holds D'_i.
struct SimRandomness {
  Challenge ch{1};
  GroupElement b;
  std::vector<std::size_t> tau;
  std::vector<GroupElement> first;
  std::vector<GroupElement> second;
};

struct Extraction {
  std::size_t index;
  GroupElement secret;
};

/// Throws DuplicateStatement on repeated members, InvalidElement on invalid ones.
void check_ring(const GroupAction& action, std::span<const SetElement> ring);

/// Finds k with s . E0 = ring[k]; WitnessNotInRing if there is none.
Witness locate_witness(const GroupAction& action, std::span<const SetElement> ring,
                       const GroupElement& s);

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng);

std::pair<Commitment, State> commit_with(const GroupAction& action, const SetElement& e_m,
                                         std::span<const SetElement> ring, const Witness& witness,
                                         const CommitRandomness& randomness);

/// Samples fresh masks; re-samples whenever two betas collide so the
/// resulting transcript always verifies.
std::pair<Commitment, State> commit(const GroupAction& action, const SetElement& e_m,
                                    std::span<const SetElement> ring, const Witness& witness,
                                    Rng& rng);

std::pair<Commitment, State> commit(const GroupAction& action, const SetElement& e_m,
                                    std::span<const SetElement> ring, const GroupElement& s,
                                    Rng& rng);

Response respond(const State& st, Challenge ch);
/// Same, for an unchecked integer challenge (InvalidChallenge outside 1..4).
Response respond(const State& st, int ch);

bool verify(const GroupAction& action, const SetElement& e_m, std::span<const SetElement> ring,
            const Commitment& com, Challenge ch, const Response& resp) noexcept;

/// Ring member whose beta opens under s_m, or nullopt. LengthMismatch when
/// the commitment and ring sizes differ.
std::optional<SetElement> open(const GroupAction& action, const GroupElement& s_m,
                               std::span<const SetElement> ring, const Commitment& com);

/// open() with s_m^{-1} supplied, for opening many commitments under one key.
std::optional<SetElement> open_with_inverse(const GroupAction& action, const GroupElement& s_m_inverse,
                                            std::span<const SetElement> ring, const Commitment& com);

Transcript simulate_with(const GroupAction& action, const SetElement& e_m,
                         std::span<const SetElement> ring, std::size_t k,
                         const SimRandomness& randomness);

/// Honest-verifier simulator; needs no secret. Re-samples on colliding
/// betas, matching commit(). StatementNotInRing when e_k
/// is not a ring member.
Transcript simulate(const GroupAction& action, const SetElement& e_m,
                    std::span<const SetElement> ring, const SetElement& e_k, Rng& rng);

/// Witness extraction from four accepting responses (to challenges 1..4 in
/// order) on one commitment. NoMatchingSession if no index fits, which can
/// only happen when the responses did not all verify.
Extraction extract(const GroupAction& action, std::span<const SetElement> ring,
                   const Commitment& com, const std::array<Response, 4>& responses);

}  // namespace gaars::sigma
