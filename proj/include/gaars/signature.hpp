#pragma once

#include <cstddef>
#include <vector>

#include "gaars/openable_sigma.hpp"

namespace gaars::ars {

/// Security parameter. The session count t = 2 * lambda * |S| and the judge
/// repetition count iota = lambda are always derived, never stored.
struct Params {
  unsigned lambda = 8;
  /// Worker threads for per-session work; 0 means hardware concurrency.
  /// Outputs do not depend on it.
  unsigned threads = 0;

  std::size_t sessions(std::size_t ring_size) const noexcept { return 2u * lambda * ring_size; }
  std::size_t judge_repetitions() const noexcept { return lambda; }
};

struct KeyPair {
  SetElement pk;
  GroupElement sk;
};

struct MasterKeyPair {
  SetElement mpk;
  GroupElement msk;
};

struct Signature {
  std::vector<sigma::Commitment> coms;
  std::vector<sigma::Challenge> chs;
  std::vector<sigma::Response> resps;

  std::size_t sessions() const noexcept { return coms.size(); }
};

struct JudgeCommitment {
  SetElement e_judge;  // b' . e_open
  SetElement e_bm;     // (b' s_m) . E0
  bool operator==(const JudgeCommitment&) const = default;
};

struct JudgeEntry {
  JudgeCommitment jcom;
  std::uint8_t jch = 0;
  GroupElement jresp;
};

/// iota x t matrix of judge transcripts, row-major: entry(i, j) covers
/// repetition i of session j.
struct JudgeProof {
  std::size_t repetitions = 0;
  std::size_t sessions = 0;
  std::vector<JudgeEntry> entries;

  JudgeEntry& at(std::size_t i, std::size_t j) { return entries[i * sessions + j]; }
  const JudgeEntry& at(std::size_t i, std::size_t j) const { return entries[i * sessions + j]; }
};

}  // namespace gaars::ars
