#pragma once

// Accountable ring signature: t = 2*lambda*|S| parallel openable-sigma
// sessions made non-interactive with Fiat-Shamir, opened by majority vote,
// plus the judge protocol that makes an opening publicly checkable.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "gaars/oracle.hpp"
#include "gaars/signature.hpp"

namespace gaars::ars {

KeyPair keygen(const GroupAction& action, Rng& rng);
KeyPair keypair_from_secret(const GroupAction& action, const GroupElement& sk);
MasterKeyPair mkeygen(const GroupAction& action, Rng& rng);
MasterKeyPair master_from_secret(const GroupAction& action, const GroupElement& msk);

/// Per-session randomness comes from streams forked off one seed drawn from
/// `rng`, so the result does not depend on params.threads.
Signature sign(const GroupAction& action, const SetElement& mpk, std::span<const SetElement> ring,
               std::span<const std::uint8_t> message, const GroupElement& sk, const Params& params,
               Rng& rng);
Signature sign(const GroupAction& action, const SetElement& mpk, std::span<const SetElement> ring,
               std::span<const std::uint8_t> message, const GroupElement& sk, const Params& params,
               Rng& rng, ChallengeOracle& oracle);

bool verify(const GroupAction& action, const SetElement& mpk, std::span<const SetElement> ring,
            std::span<const std::uint8_t> message, const Signature& sig, const Params& params) noexcept;
bool verify(const GroupAction& action, const SetElement& mpk, std::span<const SetElement> ring,
            std::span<const std::uint8_t> message, const Signature& sig, const Params& params,
            ChallengeOracle& oracle) noexcept;

/// Plurality vote. Ties go to bottom when it is among the leaders, otherwise
/// to the smallest encoding.
std::optional<SetElement> maj(std::span<const std::optional<SetElement>> outs);

/// Per-session openings, in session order.
std::vector<std::optional<SetElement>> open_sessions(const GroupAction& action, const GroupElement& msk,
                                                     std::span<const SetElement> ring, const Signature& sig,
                                                     const Params& params);

std::optional<SetElement> open(const GroupAction& action, const GroupElement& msk,
                               std::span<const SetElement> ring, std::span<const std::uint8_t> message,
                               const Signature& sig, const Params& params);

// ---- judge ------------------------------------------------------------------

struct JudgeState {
  GroupElement b_prime;
  GroupElement msk;
};

std::pair<JudgeCommitment, JudgeState> jcommit_with(const GroupAction& action, const GroupElement& msk,
                                                    const sigma::Commitment& com,
                                                    const GroupElement& b_prime);
std::pair<JudgeCommitment, JudgeState> jcommit(const GroupAction& action, const GroupElement& msk,
                                               std::span<const SetElement> ring,
                                               const sigma::Commitment& com, Rng& rng);

/// jch 0 reveals b', jch 1 reveals b' msk. InvalidChallenge otherwise.
GroupElement jrespond(const GroupAction& action, const JudgeState& st, int jch);

/// StatementNotInRing when pk is not a ring member.
bool jverify(const GroupAction& action, const SetElement& mpk, std::span<const SetElement> ring,
             const SetElement& pk, const sigma::Commitment& com, const JudgeCommitment& jcom, int jch,
             const GroupElement& jresp);

struct Opening {
  std::optional<SetElement> pk;
  JudgeProof proof;
};

Opening open_with_proof(const GroupAction& action, const GroupElement& msk, std::span<const SetElement> ring,
                        std::span<const std::uint8_t> message, const Signature& sig, const Params& params,
                        Rng& rng);

/// Accepts iff pk is set, the proof has shape lambda x t with re-derived
/// challenges, and at least lambda sessions pass every repetition.
bool judge(const GroupAction& action, const SetElement& mpk, std::span<const SetElement> ring,
           const Signature& sig, const std::optional<SetElement>& pk, const JudgeProof& proof,
           const Params& params) noexcept;

}  // namespace gaars::ars
