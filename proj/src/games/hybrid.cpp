#include <algorithm>

#include "gaars/games.hpp"

namespace gaars::games {

sigma::Transcript hyb2_transcript_with(const GroupAction& action, const SetElement& e_m,
                                       std::span<const SetElement> ring, const sigma::Witness& witness,
                                       const Hyb2Randomness& rnd) {
  sigma::check_ring(action, ring);
  const std::size_t n = ring.size();
  if (witness.index >= n) throw Error(Errc::witness_not_in_ring, "witness index outside ring");
  const int ch = rnd.ch.value();
  if (rnd.deltas.size() != n || rnd.delta_primes.size() != n || rnd.tau.size() != n ||
      (ch == 4 && rnd.rs.size() != n)) {
    throw Error(Errc::length_mismatch, "hybrid randomness does not match ring size");
  }
  std::vector<std::size_t> sorted = rnd.tau;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (sorted[i] != i) throw Error(Errc::length_mismatch, "tau is not a permutation");
  }

  const SetElement& e0 = action.base_point();
  sigma::Commitment com;
  for (std::size_t i = 0; i < n; ++i) {
    com.alphas.push_back(action.act(rnd.deltas[i], ring[i]));
    com.betas.push_back(action.act(rnd.delta_primes[i], com.alphas[i]));
  }
  com.e_open = action.act(rnd.r, e0);

  std::vector<SetElement> gammas;
  GroupElement l;
  if (ch <= 3) {
    com.e_check = action.act(rnd.b, com.e_open);
    for (const auto& beta : com.betas) gammas.push_back(action.act(rnd.b, beta));
  } else {
    for (const auto& r : rnd.rs) gammas.push_back(action.act(r, e0));
    l = rnd.rs[witness.index];
    com.e_check = action.act(l, e_m);
  }
  for (auto j : rnd.tau) com.gammas.push_back(gammas[j]);

  sigma::Response resp;
  switch (ch) {
    case 1: resp = sigma::DeltasResponse{rnd.deltas}; break;
    case 2: resp = sigma::DeltaPrimesResponse{rnd.delta_primes}; break;
    case 3: resp = sigma::BResponse{rnd.b}; break;
    default: resp = sigma::LResponse{l}; break;
  }
  return sigma::Transcript{std::move(com), rnd.ch, std::move(resp)};
}

sigma::Transcript hyb2_transcript(const GroupAction& action, const SetElement& e_m,
                                  std::span<const SetElement> ring, const GroupElement& s, Rng& rng) {
  sigma::check_ring(action, ring);
  const auto witness = sigma::locate_witness(action, ring, s);
  const std::size_t n = ring.size();
  Hyb2Randomness r;
  r.ch = sigma::Challenge(static_cast<int>(rng.uniform_index(4)) + 1);
  for (std::size_t i = 0; i < n; ++i) r.deltas.push_back(action.sample_group(rng));
  for (std::size_t i = 0; i < n; ++i) r.delta_primes.push_back(action.sample_group(rng));
  r.b = action.sample_group(rng);
  r.tau = sigma::random_permutation(n, rng);
  r.r = action.sample_group(rng);
  for (std::size_t i = 0; i < n; ++i) r.rs.push_back(action.sample_group(rng));
  return hyb2_transcript_with(action, e_m, ring, witness, r);
}

}  // namespace gaars::games
