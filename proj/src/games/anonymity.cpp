#include <algorithm>

#include "gaars/games.hpp"

namespace gaars::games {

AnonymityOutcome run_anonymity_game(const GroupAction& action, const Distinguisher& distinguisher,
                                    const ars::KeyPair& kp0, const ars::KeyPair& kp1, const ars::Params& params,
                                    Rng& rng) {
  AnonymityOutcome out;
  const auto master = ars::mkeygen(action, rng);
  out.bit = static_cast<int>(rng.uniform_index(2));
  const ars::KeyPair& chosen = out.bit == 0 ? kp0 : kp1;

  SignStar sign = [&](std::span<const SetElement> ring,
                      std::span<const std::uint8_t> m) -> std::optional<ars::Signature> {
    const bool both = std::find(ring.begin(), ring.end(), kp0.pk) != ring.end() &&
                      std::find(ring.begin(), ring.end(), kp1.pk) != ring.end();
    if (!both) return std::nullopt;
    return ars::sign(action, master.mpk, ring, m, chosen.sk, params, rng);
  };
  DeterministicRng tape(DeterministicRng::draw_seed(rng), 0);
  out.guess = distinguisher(master.mpk, sign, tape);
  out.win = out.guess == out.bit;
  return out;
}

}  // namespace gaars::games
