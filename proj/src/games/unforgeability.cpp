#include <algorithm>

#include "gaars/codec.hpp"
#include "gaars/games.hpp"

namespace gaars::games {
namespace {

class UfGame final : public UfOracles {
 public:
  UfGame(const GroupAction& action, const ars::Params& params, ars::MasterKeyPair master, GameState& state,
         bool simulate, Rng& rng)
      : action_(action),
        params_(params),
        master_(std::move(master)),
        state_(state),
        simulate_(simulate),
        rng_(rng),
        oracle_(rng.next_u64()) {}

  const SetElement& mpk() const override { return master_.mpk; }

  std::vector<SetElement> honest_keys() const override {
    std::vector<SetElement> out;
    for (const auto& kp : state_.hon) out.push_back(kp.pk);
    return out;
  }

  ars::Signature sign(const SetElement& mpk, std::span<const SetElement> ring, std::span<const std::uint8_t> message,
                      const SetElement& signer) override {
    const auto kp = std::find_if(state_.hon.begin(), state_.hon.end(),
                                 [&](const ars::KeyPair& k) { return k.pk == signer; });
    if (kp == state_.hon.end()) throw Error(Errc::protocol_violation, "sign query for a non-honest key");
    if (std::find(ring.begin(), ring.end(), signer) == ring.end()) {
      throw Error(Errc::protocol_violation, "signer is not in the queried ring");
    }
    ars::Signature sig = simulate_ ? simulate_sign(action_, mpk, ring, message, signer, params_, oracle_, rng_)
                                   : ars::sign(action_, mpk, ring, message, kp->sk, params_, rng_, oracle_);
    state_.log.push_back(SignRecord{signer, {ring.begin(), ring.end()}, {message.begin(), message.end()},
                                    codec::encode_signature(action_, sig)});
    return sig;
  }

  GroupElement corrupt(const SetElement& pk) override {
    const auto kp = std::find_if(state_.hon.begin(), state_.hon.end(),
                                 [&](const ars::KeyPair& k) { return k.pk == pk; });
    if (kp == state_.hon.end()) throw Error(Errc::protocol_violation, "corrupt query for a non-honest key");
    state_.cor.insert(pk);
    return kp->sk;
  }

  ChallengeOracle& oracle() override { return oracle_; }

  const ars::MasterKeyPair& master() const { return master_; }

 private:
  const GroupAction& action_;
  const ars::Params& params_;
  ars::MasterKeyPair master_;
  GameState& state_;
  bool simulate_;
  Rng& rng_;
  ProgrammableOracle oracle_;
};

}  // namespace

UfOutcome run_unforgeability_game(const GroupAction& action, const UfAdversary& adversary, std::size_t n_h,
                                  const ars::Params& params, Rng& rng, const UfOptions& options) {
  UfOutcome out;
  const auto master = options.master ? *options.master : ars::mkeygen(action, rng);
  while (out.state.hon.size() < n_h) {
    auto kp = ars::keygen(action, rng);
    const bool seen = std::any_of(out.state.hon.begin(), out.state.hon.end(),
                                  [&](const ars::KeyPair& k) { return k.pk == kp.pk; });
    if (!seen) out.state.hon.push_back(std::move(kp));
  }

  UfGame game(action, params, master, out.state, options.simulate_signing, rng);
  DeterministicRng tape(DeterministicRng::draw_seed(rng), 0);
  out.forgery = adversary(game, tape);
  if (!out.forgery) return out;

  const auto& f = *out.forgery;
  Bytes encoded;
  try {
    encoded = codec::encode_signature(action, f.sig);
  } catch (const Error&) {
    return out;
  }
  out.fresh = std::none_of(out.state.log.begin(), out.state.log.end(), [&](const SignRecord& r) {
    return r.message == f.message && r.signature == encoded;
  });
  out.verified = ars::verify(action, master.mpk, f.ring, f.message, f.sig, params, game.oracle());
  if (!out.fresh || !out.verified) return out;

  out.opened = ars::open(action, master.msk, f.ring, f.message, f.sig, params);
  if (!out.opened) {
    out.win = true;
  } else {
    const bool honest = std::any_of(out.state.hon.begin(), out.state.hon.end(),
                                    [&](const ars::KeyPair& k) { return k.pk == *out.opened; });
    out.win = honest && !out.state.cor.contains(*out.opened);
  }
  return out;
}

}  // namespace gaars::games
