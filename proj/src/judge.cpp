#include <algorithm>

#include "gaars/ars.hpp"
#include "gaars/codec.hpp"
#include "parallel.hpp"

namespace gaars::ars {

std::pair<JudgeCommitment, JudgeState> jcommit_with(const GroupAction& action, const GroupElement& msk,
                                                    const sigma::Commitment& com,
                                                    const GroupElement& b_prime) {
  if (!action.validate_set_element(com.e_open)) {
    throw Error(Errc::invalid_element, "commitment opening tag is not a set element");
  }
  JudgeCommitment jcom{action.act(b_prime, com.e_open),
                       action.act(action.compose(b_prime, msk), action.base_point())};
  return {std::move(jcom), JudgeState{b_prime, msk}};
}

std::pair<JudgeCommitment, JudgeState> jcommit(const GroupAction& action, const GroupElement& msk,
                                               std::span<const SetElement>, const sigma::Commitment& com,
                                               Rng& rng) {
  return jcommit_with(action, msk, com, action.sample_group(rng));
}

GroupElement jrespond(const GroupAction& action, const JudgeState& st, int jch) {
  switch (jch) {
    case 0: return st.b_prime;
    case 1: return action.compose(st.b_prime, st.msk);
    default: throw Error(Errc::invalid_challenge, "judge challenge must be 0 or 1");
  }
}

bool jverify(const GroupAction& action, const SetElement& mpk, std::span<const SetElement> ring,
             const SetElement& pk, const sigma::Commitment& com, const JudgeCommitment& jcom, int jch,
             const GroupElement& jresp) {
  const auto it = std::find(ring.begin(), ring.end(), pk);
  if (it == ring.end()) throw Error(Errc::statement_not_in_ring, "claimed key is not a ring member");
  const std::size_t k = static_cast<std::size_t>(it - ring.begin());
  if (com.betas.size() != ring.size()) throw Error(Errc::length_mismatch, "commitment and ring sizes differ");
  switch (jch) {
    case 0:
      return action.act(jresp, com.e_open) == jcom.e_judge && action.act(jresp, mpk) == jcom.e_bm;
    case 1:
      return action.act(jresp, com.betas[k]) == jcom.e_judge &&
             action.act(jresp, action.base_point()) == jcom.e_bm;
    default:
      throw Error(Errc::invalid_challenge, "judge challenge must be 0 or 1");
  }
}

Opening open_with_proof(const GroupAction& action, const GroupElement& msk, std::span<const SetElement> ring,
                        std::span<const std::uint8_t> message, const Signature& sig, const Params& params,
                        Rng& rng) {
  Opening out;
  out.pk = open(action, msk, ring, message, sig, params);

  const std::size_t iota = params.judge_repetitions();
  const std::size_t t = sig.coms.size();
  const auto seed = DeterministicRng::draw_seed(rng);
  std::vector<JudgeCommitment> jcoms(iota * t);
  std::vector<JudgeState> states(iota * t);
  detail::parallel_for(iota * t, params.threads, [&](std::size_t idx) {
    DeterministicRng entry_rng(seed, idx);
    auto [jcom, st] = jcommit(action, msk, ring, sig.coms[idx % t], entry_rng);
    jcoms[idx] = std::move(jcom);
    states[idx] = std::move(st);
  });
  const auto jchs = codec::derive_judge_challenges(action, sig, jcoms);

  out.proof.repetitions = iota;
  out.proof.sessions = t;
  out.proof.entries.resize(iota * t);
  for (std::size_t idx = 0; idx < iota * t; ++idx) {
    auto& e = out.proof.entries[idx];
    e.jcom = jcoms[idx];
    e.jch = jchs[idx];
    e.jresp = jrespond(action, states[idx], jchs[idx]);
  }
  return out;
}

bool judge(const GroupAction& action, const SetElement& mpk, std::span<const SetElement> ring,
           const Signature& sig, const std::optional<SetElement>& pk, const JudgeProof& proof,
           const Params& params) noexcept {
  try {
    if (!pk) return false;
    if (params.lambda == 0 || !action.validate_set_element(mpk)) return false;
    const std::size_t iota = params.judge_repetitions();
    const std::size_t t = params.sessions(ring.size());
    if (sig.coms.size() != t || proof.repetitions != iota || proof.sessions != t ||
        proof.entries.size() != iota * t) {
      return false;
    }
    if (std::find(ring.begin(), ring.end(), *pk) == ring.end()) return false;

    std::vector<JudgeCommitment> jcoms;
    jcoms.reserve(proof.entries.size());
    for (const auto& e : proof.entries) jcoms.push_back(e.jcom);
    const auto jchs = codec::derive_judge_challenges(action, sig, jcoms);
    for (std::size_t idx = 0; idx < jchs.size(); ++idx) {
      if (proof.entries[idx].jch != jchs[idx]) return false;
    }

    std::vector<char> jout(t, 0);
    detail::parallel_for(t, params.threads, [&](std::size_t j) {
      for (std::size_t i = 0; i < iota; ++i) {
        const auto& e = proof.at(i, j);
        if (!action.validate_group_element(e.jresp) ||
            !jverify(action, mpk, ring, *pk, sig.coms[j], e.jcom, e.jch, e.jresp)) {
          return;
        }
      }
      jout[j] = 1;
    });
    return static_cast<std::size_t>(std::count(jout.begin(), jout.end(), 1)) >= params.lambda;
  } catch (...) {
    return false;
  }
}

}  // namespace gaars::ars
