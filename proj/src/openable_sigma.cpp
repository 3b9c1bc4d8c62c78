#include "gaars/openable_sigma.hpp"

#include <algorithm>
#include <numeric>

namespace gaars::sigma {
namespace {

bool pairwise_distinct(std::span<const SetElement> xs) {
  std::vector<SetElement> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

void check_permutation(std::span<const std::size_t> tau, std::size_t n) {
  std::vector<bool> seen(n, false);
  if (tau.size() != n) throw Error(Errc::length_mismatch, "permutation has wrong length");
  for (auto t : tau) {
    if (t >= n || seen[t]) throw Error(Errc::length_mismatch, "tau is not a permutation");
    seen[t] = true;
  }
}

std::vector<SetElement> permuted(std::vector<SetElement> xs, std::span<const std::size_t> tau) {
  std::vector<SetElement> out;
  out.reserve(xs.size());
  for (auto t : tau) out.push_back(xs[t]);
  return out;
}

}  // namespace

Challenge::Challenge(int value) : value_(value) {
  if (value < 1 || value > 4) {
    throw Error(Errc::invalid_challenge, "challenge " + std::to_string(value) + " not in {1,2,3,4}");
  }
}

void check_ring(const GroupAction& action, std::span<const SetElement> ring) {
  if (ring.empty()) throw Error(Errc::length_mismatch, "ring is empty");
  for (const auto& e : ring) {
    if (!action.validate_set_element(e)) throw Error(Errc::invalid_element, "ring member is not a set element");
  }
  if (!pairwise_distinct(ring)) throw Error(Errc::duplicate_statement, "ring members must be distinct");
}

Witness locate_witness(const GroupAction& action, std::span<const SetElement> ring,
                       const GroupElement& s) {
  const SetElement pk = action.act(s, action.base_point());
  const auto it = std::find(ring.begin(), ring.end(), pk);
  if (it == ring.end()) throw Error(Errc::witness_not_in_ring, "secret matches no ring member");
  return Witness{static_cast<std::size_t>(it - ring.begin()), s};
}

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> tau(n);
  std::iota(tau.begin(), tau.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(tau[i - 1], tau[rng.uniform_index(i)]);
  }
  return tau;
}

std::pair<Commitment, State> commit_with(const GroupAction& action, const SetElement& e_m,
                                         std::span<const SetElement> ring, const Witness& witness,
                                         const CommitRandomness& randomness) {
  check_ring(action, ring);
  const std::size_t n = ring.size();
  if (witness.index >= n) throw Error(Errc::witness_not_in_ring, "witness index outside ring");
  if (randomness.deltas.size() != n || randomness.delta_primes.size() != n) {
    throw Error(Errc::length_mismatch, "commit randomness does not match ring size");
  }
  check_permutation(randomness.tau, n);

  Commitment com;
  com.alphas.reserve(n);
  com.betas.reserve(n);
  std::vector<SetElement> gammas;
  gammas.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    com.alphas.push_back(action.act(randomness.deltas[i], ring[i]));
    com.betas.push_back(action.act(randomness.delta_primes[i], com.alphas[i]));
    gammas.push_back(action.act(randomness.b, com.betas[i]));
  }
  com.gammas = permuted(std::move(gammas), randomness.tau);

  const std::size_t k = witness.index;
  const GroupElement mask = action.compose(randomness.deltas[k], randomness.delta_primes[k]);
  com.e_open = action.act(action.compose(mask, witness.secret), e_m);
  com.e_check = action.act(randomness.b, com.e_open);

  State st{randomness.deltas, randomness.delta_primes, randomness.b,
           action.compose({mask, randomness.b, witness.secret}), k, randomness.tau};
  return {std::move(com), std::move(st)};
}

std::pair<Commitment, State> commit(const GroupAction& action, const SetElement& e_m,
                                    std::span<const SetElement> ring, const Witness& witness,
                                    Rng& rng) {
  const std::size_t n = ring.size();
  for (;;) {
    CommitRandomness r;
    r.deltas.reserve(n);
    r.delta_primes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.deltas.push_back(action.sample_group(rng));
    for (std::size_t i = 0; i < n; ++i) r.delta_primes.push_back(action.sample_group(rng));
    r.b = action.sample_group(rng);
    r.tau = random_permutation(n, rng);
    auto out = commit_with(action, e_m, ring, witness, r);
    if (pairwise_distinct(out.first.betas)) return out;
  }
}

std::pair<Commitment, State> commit(const GroupAction& action, const SetElement& e_m,
                                    std::span<const SetElement> ring, const GroupElement& s,
                                    Rng& rng) {
  check_ring(action, ring);
  return commit(action, e_m, ring, locate_witness(action, ring, s), rng);
}

Response respond(const State& st, Challenge ch) {
  switch (ch.value()) {
    case 1: return DeltasResponse{st.deltas};
    case 2: return DeltaPrimesResponse{st.delta_primes};
    case 3: return BResponse{st.b};
    default: return LResponse{st.l};
  }
}

Response respond(const State& st, int ch) { return respond(st, Challenge(ch)); }

bool verify(const GroupAction& action, const SetElement& e_m, std::span<const SetElement> ring,
            const Commitment& com, Challenge ch, const Response& resp) noexcept {
  try {
    const std::size_t n = ring.size();
    if (n == 0 || com.alphas.size() != n || com.betas.size() != n || com.gammas.size() != n) {
      return false;
    }
    if (response_challenge(resp) != ch.value()) return false;
    if (!pairwise_distinct(ring) || !pairwise_distinct(com.betas)) return false;

    switch (ch.value()) {
      case 1: {
        const auto& deltas = std::get<DeltasResponse>(resp).values;
        if (deltas.size() != n) return false;
        for (std::size_t i = 0; i < n; ++i) {
          if (action.act(deltas[i], ring[i]) != com.alphas[i]) return false;
        }
        return true;
      }
      case 2: {
        const auto& primes = std::get<DeltaPrimesResponse>(resp).values;
        if (primes.size() != n) return false;
        for (std::size_t i = 0; i < n; ++i) {
          if (action.act(primes[i], com.alphas[i]) != com.betas[i]) return false;
        }
        return true;
      }
      case 3: {
        const auto& b = std::get<BResponse>(resp).value;
        if (action.act(b, com.e_open) != com.e_check) return false;
        std::vector<SetElement> expected;
        expected.reserve(n);
        for (const auto& beta : com.betas) expected.push_back(action.act(b, beta));
        std::vector<SetElement> given = com.gammas;
        std::sort(expected.begin(), expected.end());
        std::sort(given.begin(), given.end());
        return expected == given;
      }
      default: {
        const auto& l = std::get<LResponse>(resp).value;
        if (action.act(l, e_m) != com.e_check) return false;
        const SetElement target = action.act(l, action.base_point());
        return std::find(com.gammas.begin(), com.gammas.end(), target) != com.gammas.end();
      }
    }
  } catch (...) {
    return false;
  }
}

std::optional<SetElement> open(const GroupAction& action, const GroupElement& s_m,
                               std::span<const SetElement> ring, const Commitment& com) {
  if (com.betas.size() != ring.size()) {
    throw Error(Errc::length_mismatch, "commitment and ring sizes differ");
  }
  // s_m . beta_i = e_open  <=>  beta_i = s_m^{-1} . e_open, since the action is free.
  return open_with_inverse(action, action.invert(s_m), ring, com);
}

std::optional<SetElement> open_with_inverse(const GroupAction& action, const GroupElement& s_m_inverse,
                                            std::span<const SetElement> ring, const Commitment& com) {
  if (com.betas.size() != ring.size()) {
    throw Error(Errc::length_mismatch, "commitment and ring sizes differ");
  }
  const SetElement target = action.act(s_m_inverse, com.e_open);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (com.betas[i] == target) return ring[i];
  }
  return std::nullopt;
}

Transcript simulate_with(const GroupAction& action, const SetElement& e_m,
                         std::span<const SetElement> ring, std::size_t k,
                         const SimRandomness& rnd) {
  const std::size_t n = ring.size();
  if (k >= n) throw Error(Errc::statement_not_in_ring, "simulated index outside ring");
  if (rnd.first.size() != n || rnd.second.size() != n) {
    throw Error(Errc::length_mismatch, "simulator randomness does not match ring size");
  }
  check_permutation(rnd.tau, n);
  const SetElement& e0 = action.base_point();
  const int ch = rnd.ch.value();

  Commitment com;
  GroupElement open_mask;
  if (ch == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      com.alphas.push_back(action.act(rnd.first[i], ring[i]));
      com.betas.push_back(action.act(action.compose(rnd.first[i], rnd.second[i]), e0));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      com.alphas.push_back(action.act(rnd.first[i], e0));
      com.betas.push_back(action.act(rnd.second[i], com.alphas[i]));
    }
  }
  open_mask = action.compose(rnd.first[k], rnd.second[k]);
  com.e_open = action.act(open_mask, e_m);

  std::vector<SetElement> gammas;
  for (const auto& beta : com.betas) gammas.push_back(action.act(rnd.b, beta));
  com.gammas = permuted(std::move(gammas), rnd.tau);

  const GroupElement l = action.compose(open_mask, rnd.b);
  com.e_check = ch <= 3 ? action.act(rnd.b, com.e_open) : action.act(l, e_m);

  Response resp;
  switch (ch) {
    case 1: resp = DeltasResponse{rnd.first}; break;
    case 2: resp = DeltaPrimesResponse{rnd.second}; break;
    case 3: resp = BResponse{rnd.b}; break;
    default: resp = LResponse{l}; break;
  }
  return Transcript{std::move(com), rnd.ch, std::move(resp)};
}

Transcript simulate(const GroupAction& action, const SetElement& e_m,
                    std::span<const SetElement> ring, const SetElement& e_k, Rng& rng) {
  const auto it = std::find(ring.begin(), ring.end(), e_k);
  if (it == ring.end()) throw Error(Errc::statement_not_in_ring, "simulated statement not in ring");
  const std::size_t n = ring.size();
  const auto k = static_cast<std::size_t>(it - ring.begin());
  for (;;) {
    SimRandomness r;
    r.ch = Challenge(static_cast<int>(rng.uniform_index(4)) + 1);
    r.b = action.sample_group(rng);
    r.tau = random_permutation(n, rng);
    for (std::size_t i = 0; i < n; ++i) r.first.push_back(action.sample_group(rng));
    for (std::size_t i = 0; i < n; ++i) r.second.push_back(action.sample_group(rng));
    auto tr = simulate_with(action, e_m, ring, k, r);
    if (pairwise_distinct(tr.com.betas)) return tr;
  }
}

Extraction extract(const GroupAction& action, std::span<const SetElement> ring,
                   const Commitment& com, const std::array<Response, 4>& responses) {
  for (int c = 0; c < 4; ++c) {
    if (response_challenge(responses[c]) != c + 1) {
      throw Error(Errc::invalid_challenge, "responses must answer challenges 1..4 in order");
    }
  }
  const auto& deltas = std::get<DeltasResponse>(responses[0]).values;
  const auto& primes = std::get<DeltaPrimesResponse>(responses[1]).values;
  const auto& b = std::get<BResponse>(responses[2]).value;
  const auto& l = std::get<LResponse>(responses[3]).value;
  const std::size_t n = ring.size();
  if (com.betas.size() != n || deltas.size() != n || primes.size() != n) {
    throw Error(Errc::length_mismatch, "extraction inputs disagree on ring size");
  }

  const SetElement target = action.act(l, action.base_point());
  for (std::size_t k = 0; k < n; ++k) {
    if (action.act(b, com.betas[k]) != target) continue;
    const GroupElement mask = action.compose({deltas[k], primes[k], b});
    return Extraction{k, action.compose(l, action.invert(mask))};
  }
  throw Error(Errc::no_matching_session, "no ring index satisfies l.E0 = b.beta_k");
}

}  // namespace gaars::sigma
