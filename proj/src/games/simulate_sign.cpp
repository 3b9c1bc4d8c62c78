#include "gaars/games.hpp"

namespace gaars::games {

ars::Signature simulate_sign(const GroupAction& action, const SetElement& mpk, std::span<const SetElement> ring,
                             std::span<const std::uint8_t> message, const SetElement& pk_target,
                             const ars::Params& params, ProgrammableOracle& oracle, Rng& rng) {
  if (params.lambda == 0) throw Error(Errc::length_mismatch, "lambda must be at least 1");
  sigma::check_ring(action, ring);
  if (!action.validate_set_element(mpk)) throw Error(Errc::invalid_element, "master public key is not a set element");
  const std::size_t t = params.sessions(ring.size());

  ars::Signature sig;
  sig.coms.reserve(t);
  sig.chs.reserve(t);
  sig.resps.reserve(t);
  for (std::size_t j = 0; j < t; ++j) {
    auto tr = sigma::simulate(action, mpk, ring, pk_target, rng);
    sig.coms.push_back(std::move(tr.com));
    sig.chs.push_back(tr.ch);
    sig.resps.push_back(std::move(tr.resp));
  }
  oracle.program(ProgrammableOracle::make_query(action, sig.coms, message, t), sig.chs);
  return sig;
}

}  // namespace gaars::games
