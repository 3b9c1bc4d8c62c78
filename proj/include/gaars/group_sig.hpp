#pragma once

// Static group signature: an accountable ring signature whose ring and
// master key are fixed once at setup. Member identity = roster position.

#include <cstddef>
#include <optional>
#include <vector>

#include "gaars/ars.hpp"
#include "gaars/codec.hpp"

namespace gaars::gs {

struct GroupPublicKey {
  SetElement mpk;
  std::vector<SetElement> roster;
  bool operator==(const GroupPublicKey&) const = default;
};

struct GroupSetup {
  GroupPublicKey gpk;
  std::vector<GroupElement> sks;
  GroupElement msk;
};

/// One master key and n member keys; members are re-sampled on collision.
GroupSetup gkeygen(const GroupAction& action, std::size_t n, const ars::Params& params, Rng& rng);

ars::Signature gsign(const GroupAction& action, const GroupPublicKey& gpk, std::span<const std::uint8_t> message,
                     const GroupElement& sk, const ars::Params& params, Rng& rng);

bool gverify(const GroupAction& action, const GroupPublicKey& gpk, std::span<const std::uint8_t> message,
             const ars::Signature& sig, const ars::Params& params) noexcept;

/// Roster index of the signer, or nullopt when the opening is bottom.
std::optional<std::size_t> gopen(const GroupAction& action, const GroupPublicKey& gpk, const GroupElement& msk,
                                 std::span<const std::uint8_t> message, const ars::Signature& sig,
                                 const ars::Params& params);

/// mpk || ring encoding.
codec::Bytes encode_group_public_key(const GroupPublicKey& gpk);
GroupPublicKey decode_group_public_key(const GroupAction& action, std::span<const std::uint8_t> bytes);

}  // namespace gaars::gs
