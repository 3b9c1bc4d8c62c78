#include "gaars/group_sig.hpp"

#include <algorithm>

namespace gaars::gs {

GroupSetup gkeygen(const GroupAction& action, std::size_t n, const ars::Params&, Rng& rng) {
  if (n == 0) throw Error(Errc::length_mismatch, "a group needs at least one member");
  GroupSetup out;
  const auto master = ars::mkeygen(action, rng);
  out.gpk.mpk = master.mpk;
  out.msk = master.msk;
  while (out.gpk.roster.size() < n) {
    const auto kp = ars::keygen(action, rng);
    if (std::find(out.gpk.roster.begin(), out.gpk.roster.end(), kp.pk) != out.gpk.roster.end()) continue;
    out.gpk.roster.push_back(kp.pk);
    out.sks.push_back(kp.sk);
  }
  return out;
}

ars::Signature gsign(const GroupAction& action, const GroupPublicKey& gpk, std::span<const std::uint8_t> message,
                     const GroupElement& sk, const ars::Params& params, Rng& rng) {
  return ars::sign(action, gpk.mpk, gpk.roster, message, sk, params, rng);
}

bool gverify(const GroupAction& action, const GroupPublicKey& gpk, std::span<const std::uint8_t> message,
             const ars::Signature& sig, const ars::Params& params) noexcept {
  return ars::verify(action, gpk.mpk, gpk.roster, message, sig, params);
}

std::optional<std::size_t> gopen(const GroupAction& action, const GroupPublicKey& gpk, const GroupElement& msk,
                                 std::span<const std::uint8_t> message, const ars::Signature& sig,
                                 const ars::Params& params) {
  const auto pk = ars::open(action, msk, gpk.roster, message, sig, params);
  if (!pk) return std::nullopt;
  const auto it = std::find(gpk.roster.begin(), gpk.roster.end(), *pk);
  if (it == gpk.roster.end()) return std::nullopt;
  return static_cast<std::size_t>(it - gpk.roster.begin());
}

codec::Bytes encode_group_public_key(const GroupPublicKey& gpk) {
  codec::Writer w;
  w.element(gpk.mpk).raw(codec::encode_ring(gpk.roster));
  return w.take();
}

GroupPublicKey decode_group_public_key(const GroupAction& action, std::span<const std::uint8_t> bytes) {
  codec::Reader r(action, bytes);
  GroupPublicKey gpk;
  gpk.mpk = r.set();
  gpk.roster = codec::decode_ring(action, r.rest());
  return gpk;
}

}  // namespace gaars::gs
