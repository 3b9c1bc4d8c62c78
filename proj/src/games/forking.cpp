#include <algorithm>
#include <cmath>
#include <string>

#include "gaars/games.hpp"

namespace gaars::games {

std::size_t fork_budget(const ForkOptions& options, std::size_t t) {
  if (options.epsilon <= 0.0) return options.budget_cap;
  const double log_t = std::max(1.0, std::log2(static_cast<double>(std::max<std::size_t>(t, 1))));
  const double budget = std::ceil(static_cast<double>(options.budget_constant) *
                                  static_cast<double>(options.queries) * static_cast<double>(t) * log_t /
                                  options.epsilon);
  return static_cast<std::size_t>(std::min(budget, static_cast<double>(options.budget_cap)));
}

ForkAdversary honest_signer_adversary(const GroupAction& action, const SetElement& mpk,
                                      std::vector<SetElement> ring, GroupElement sk, Bytes message,
                                      ars::Params params, std::size_t decoys) {
  return [&action, mpk, ring = std::move(ring), sk = std::move(sk), message = std::move(message), params,
          decoys](ChallengeOracle& oracle, Rng& tape) -> std::optional<Forgery> {
    for (std::size_t d = 0; d < decoys; ++d) {
      const std::string decoy = "decoy " + std::to_string(d);
      ars::sign(action, mpk, ring, Bytes(decoy.begin(), decoy.end()), sk, params, tape, oracle);
    }
    auto sig = ars::sign(action, mpk, ring, message, sk, params, tape, oracle);
    return Forgery{ring, message, std::move(sig)};
  };
}

ForkResult fork_and_extract(const GroupAction& action, const ForkAdversary& adversary, const ars::MasterKeyPair& master,
                            const ars::Params& params, const ForkOptions& options) {
  DeterministicRng seeds(options.seed);
  ForkResult out;

  // First run: repeat with fresh tapes until the adversary succeeds once.
  std::uint64_t tape_seed = 0;
  std::optional<ProgrammableOracle> oracle;
  std::optional<Forgery> first;
  for (;;) {
    if (out.runs >= options.budget_cap) throw Error(Errc::fork_budget_exhausted, "adversary never succeeded");
    tape_seed = seeds.next_u64();
    oracle.emplace(seeds.next_u64());
    DeterministicRng tape(tape_seed);
    auto f = adversary(*oracle, tape);
    ++out.runs;
    if (f && ars::verify(action, master.mpk, f->ring, f->message, f->sig, params, *oracle)) {
      first = std::move(f);
      break;
    }
  }

  const std::size_t t = first->sig.sessions();
  const auto critical = ProgrammableOracle::make_query(action, first->sig.coms, first->message, t);
  out.critical_query = *oracle->position(critical);
  const std::size_t budget = fork_budget(options, t);

  std::vector<ars::Signature> collected{first->sig};
  while (collected.size() < 4) {
    if (out.runs >= budget) throw Error(Errc::fork_budget_exhausted, "rewind budget exhausted");
    oracle->fork(out.critical_query, seeds.next_u64());
    DeterministicRng tape(tape_seed);
    auto g = adversary(*oracle, tape);
    ++out.runs;
    if (!g || g->ring != first->ring || g->message != first->message || g->sig.coms != first->sig.coms) continue;
    if (!ars::verify(action, master.mpk, g->ring, g->message, g->sig, params, *oracle)) continue;
    const bool repeat = std::any_of(collected.begin(), collected.end(),
                                    [&](const ars::Signature& s) { return s.chs == g->sig.chs; });
    if (!repeat) collected.push_back(std::move(g->sig));
  }

  const auto& ring = first->ring;
  const auto& coms = first->sig.coms;
  out.opened = ars::open(action, master.msk, ring, first->message, first->sig, params);
  for (std::size_t j = 0; j < t; ++j) {
    if (sigma::open(action, master.msk, ring, coms[j]) != out.opened) continue;
    std::array<std::optional<sigma::Response>, 4> by_challenge;
    for (const auto& s : collected) by_challenge[s.chs[j].value() - 1] = s.resps[j];
    if (!std::all_of(by_challenge.begin(), by_challenge.end(), [](const auto& r) { return r.has_value(); })) {
      continue;
    }
    out.session = j;
    out.com = coms[j];
    for (int c = 0; c < 4; ++c) out.responses[c] = *by_challenge[c];
    if (!out.opened) {
      out.kind = ForkResult::Kind::soundness_violation;
      return out;
    }
    try {
      const auto ext = sigma::extract(action, ring, out.com, out.responses);
      out.pk = ring[ext.index];
      out.sk = ext.secret;
      out.kind = action.act(ext.secret, action.base_point()) == *out.opened ? ForkResult::Kind::extracted
                                                                            : ForkResult::Kind::soundness_violation;
    } catch (const Error&) {
      out.kind = ForkResult::Kind::soundness_violation;
    }
    return out;
  }
  throw Error(Errc::no_good_session, "no opened session carries four distinct challenges");
}

}  // namespace gaars::games
