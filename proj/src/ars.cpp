#include "gaars/ars.hpp"

#include <map>

#include "gaars/codec.hpp"
#include "parallel.hpp"

namespace gaars::ars {
namespace {

void check_params(const Params& params) {
  if (params.lambda == 0) throw Error(Errc::length_mismatch, "lambda must be at least 1");
}

void check_set_element(const GroupAction& action, const SetElement& e, const char* what) {
  if (!action.validate_set_element(e)) throw Error(Errc::invalid_element, std::string(what) + " is not a set element");
}

}  // namespace

KeyPair keypair_from_secret(const GroupAction& action, const GroupElement& sk) {
  return KeyPair{action.act(sk, action.base_point()), sk};
}

KeyPair keygen(const GroupAction& action, Rng& rng) { return keypair_from_secret(action, action.sample_group(rng)); }

MasterKeyPair master_from_secret(const GroupAction& action, const GroupElement& msk) {
  return MasterKeyPair{action.act(msk, action.base_point()), msk};
}

MasterKeyPair mkeygen(const GroupAction& action, Rng& rng) {
  return master_from_secret(action, action.sample_group(rng));
}

Signature sign(const GroupAction& action, const SetElement& mpk, std::span<const SetElement> ring,
               std::span<const std::uint8_t> message, const GroupElement& sk, const Params& params,
               Rng& rng) {
  return sign(action, mpk, ring, message, sk, params, rng, hash_oracle());
}

Signature sign(const GroupAction& action, const SetElement& mpk, std::span<const SetElement> ring,
               std::span<const std::uint8_t> message, const GroupElement& sk, const Params& params,
               Rng& rng, ChallengeOracle& oracle) {
  check_params(params);
  sigma::check_ring(action, ring);
  check_set_element(action, mpk, "master public key");
  const sigma::Witness witness = sigma::locate_witness(action, ring, sk);
  const std::size_t t = params.sessions(ring.size());
  const auto seed = DeterministicRng::draw_seed(rng);

  Signature sig;
  sig.coms.resize(t);
  std::vector<sigma::State> states(t);
  detail::parallel_for(t, params.threads, [&](std::size_t j) {
    DeterministicRng session_rng(seed, j);
    auto [com, st] = sigma::commit(action, mpk, ring, witness, session_rng);
    sig.coms[j] = std::move(com);
    states[j] = std::move(st);
  });

  sig.chs = oracle.challenges(action, sig.coms, message, t);
  sig.resps.reserve(t);
  for (std::size_t j = 0; j < t; ++j) sig.resps.push_back(sigma::respond(states[j], sig.chs[j]));
  return sig;
}

bool verify(const GroupAction& action, const SetElement& mpk, std::span<const SetElement> ring,
            std::span<const std::uint8_t> message, const Signature& sig, const Params& params) noexcept {
  return verify(action, mpk, ring, message, sig, params, hash_oracle());
}

bool verify(const GroupAction& action, const SetElement& mpk, std::span<const SetElement> ring,
            std::span<const std::uint8_t> message, const Signature& sig, const Params& params,
            ChallengeOracle& oracle) noexcept {
  try {
    check_params(params);
    sigma::check_ring(action, ring);
    if (!action.validate_set_element(mpk)) return false;
    const std::size_t t = params.sessions(ring.size());
    if (sig.coms.size() != t || sig.chs.size() != t || sig.resps.size() != t) return false;
    if (oracle.challenges(action, sig.coms, message, t) != sig.chs) return false;
    std::vector<char> ok(t, 0);
    detail::parallel_for(t, params.threads, [&](std::size_t j) {
      ok[j] = sigma::verify(action, mpk, ring, sig.coms[j], sig.chs[j], sig.resps[j]);
    });
    return std::all_of(ok.begin(), ok.end(), [](char v) { return v != 0; });
  } catch (...) {
    return false;
  }
}

std::optional<SetElement> maj(std::span<const std::optional<SetElement>> outs) {
  if (outs.empty()) throw Error(Errc::length_mismatch, "majority of an empty list");
  std::size_t bottoms = 0;
  std::map<SetElement, std::size_t> counts;
  for (const auto& o : outs) {
    if (o) {
      ++counts[*o];
    } else {
      ++bottoms;
    }
  }
  std::size_t best = bottoms;
  for (const auto& [e, c] : counts) best = std::max(best, c);
  if (bottoms == best) return std::nullopt;
  for (const auto& [e, c] : counts) {
    if (c == best) return e;
  }
  return std::nullopt;
}

std::vector<std::optional<SetElement>> open_sessions(const GroupAction& action, const GroupElement& msk,
                                                     std::span<const SetElement> ring, const Signature& sig,
                                                     const Params& params) {
  check_params(params);
  sigma::check_ring(action, ring);
  if (sig.coms.empty()) throw Error(Errc::length_mismatch, "signature has no sessions");
  const GroupElement inverse = action.invert(msk);
  std::vector<std::optional<SetElement>> outs(sig.coms.size());
  detail::parallel_for(outs.size(), params.threads, [&](std::size_t j) {
    outs[j] = sigma::open_with_inverse(action, inverse, ring, sig.coms[j]);
  });
  return outs;
}

std::optional<SetElement> open(const GroupAction& action, const GroupElement& msk,
                               std::span<const SetElement> ring, std::span<const std::uint8_t>,
                               const Signature& sig, const Params& params) {
  return maj(open_sessions(action, msk, ring, sig, params));
}

}  // namespace gaars::ars
