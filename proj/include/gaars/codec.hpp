#pragma once

// Canonical byte encodings, the Fiat-Shamir expansion and the "ARS1" file
// container. All integers are big-endian; every element is written at its
// backend's fixed width.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <span>
#include <string>
#include <vector>

#include "gaars/hash.hpp"
#include "gaars/signature.hpp"

namespace gaars::codec {

using Bytes = std::vector<std::uint8_t>;

enum class DomainTag : std::uint8_t {
  signature_challenges = 0x01,
  judge_challenges = 0x02,
  key_fingerprint = 0x03,
};

struct TranscriptDigest {
  DomainTag domain_tag;
  Digest bytes;
};

TranscriptDigest transcript_digest(DomainTag tag, std::span<const std::uint8_t> input);

/// SHA-256 in counter mode: block i = SHA-256(tag || i || SHA-256(input)).
Bytes xof(DomainTag tag, std::span<const std::uint8_t> input, std::size_t length);

/// Maps expanded bytes to t challenges, two bits each, MSB first, value = bits + 1.
std::vector<sigma::Challenge> challenges_from_bytes(std::span<const std::uint8_t> bytes, std::size_t t);
/// One bit per entry, MSB first.
std::vector<std::uint8_t> bits_from_bytes(std::span<const std::uint8_t> bytes, std::size_t count);

/// Appends big-endian fields and fixed-width elements.
class Writer {
 public:
  Writer& u8(std::uint8_t v);
  Writer& u32(std::uint32_t v);
  Writer& raw(std::span<const std::uint8_t> bytes);
  template <class Tag>
  Writer& element(const Element<Tag>& e) {
    return raw(e.bytes());
  }
  Bytes& bytes() noexcept { return out_; }
  Bytes take() noexcept { return std::move(out_); }

 private:
  Bytes out_;
};

/// Consumes a buffer; throws MalformedEncoding on truncation and
/// InvalidElement on non-members.
class Reader {
 public:
  Reader(const GroupAction& action, std::span<const std::uint8_t> data) : action_(action), data_(data) {}

  std::uint8_t u8();
  std::uint32_t u32();
  std::span<const std::uint8_t> raw(std::size_t n);
  /// A u32 count bounded by what the remaining input could possibly hold.
  std::size_t count(std::size_t min_item_bytes);
  GroupElement group();
  SetElement set();
  std::span<const std::uint8_t> rest();
  bool done() const noexcept { return pos_ == data_.size(); }
  void expect_done() const;

 private:
  const GroupAction& action_;
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

Bytes encode_commitment(const GroupAction& action, const sigma::Commitment& com);
void write_commitment(const GroupAction& action, Writer& w, const sigma::Commitment& com);
sigma::Commitment read_commitment(Reader& r);
sigma::Commitment decode_commitment(const GroupAction& action, std::span<const std::uint8_t> bytes);

void write_response(Writer& w, const sigma::Response& resp);
sigma::Response read_response(Reader& r);

Bytes encode_signature(const GroupAction& action, const ars::Signature& sig);
ars::Signature decode_signature(const GroupAction& action, std::span<const std::uint8_t> bytes);

Bytes encode_judge_commitment(const ars::JudgeCommitment& jcom);
Bytes encode_judge_proof(const ars::JudgeProof& proof);
ars::JudgeProof decode_judge_proof(const GroupAction& action, std::span<const std::uint8_t> bytes);

Bytes encode_ring(std::span<const SetElement> ring);
std::vector<SetElement> decode_ring(const GroupAction& action, std::span<const std::uint8_t> bytes);

Bytes encode_key_pair(const SetElement& pk, const GroupElement& sk);
std::pair<SetElement, GroupElement> decode_key_pair(const GroupAction& action,
                                                    std::span<const std::uint8_t> bytes);
SetElement decode_public_key(const GroupAction& action, std::span<const std::uint8_t> bytes);

/// Opening result: 0x00 for bottom, or 0x01 followed by the public key.
Bytes encode_opening(const std::optional<SetElement>& pk);
std::optional<SetElement> decode_opening(const GroupAction& action, std::span<const std::uint8_t> bytes);

Bytes hash_input_for_challenges(const GroupAction& action, std::span<const sigma::Commitment> coms,
                                std::span<const std::uint8_t> message);

std::vector<sigma::Challenge> derive_challenges(const GroupAction& action,
                                                std::span<const sigma::Commitment> coms,
                                                std::span<const std::uint8_t> message, std::size_t t);

/// jch bits for an iota x t matrix of judge commitments (row-major), bound to
/// the full encoded signature.
std::vector<std::uint8_t> derive_judge_challenges(const GroupAction& action, const ars::Signature& sig,
                                                  std::span<const ars::JudgeCommitment> jcoms);

/// First 8 bytes of SHA-256(0x03 || encoding), hex.
std::string fingerprint(const SetElement& pk);

// ---- "ARS1" container -------------------------------------------------------

enum class ObjectKind : std::uint8_t {
  public_key = 0x01,
  key_pair = 0x02,
  master_public_key = 0x03,
  master_key_pair = 0x04,
  ring = 0x05,
  signature = 0x06,
  judge_proof = 0x07,
  opening = 0x08,
  group_public_key = 0x09,
};

std::string_view object_kind_name(ObjectKind kind) noexcept;

/// "ARS1" || kind || u32 body length || body.
Bytes wrap(ObjectKind kind, std::span<const std::uint8_t> body);
/// Returns the body; MalformedEncoding on bad magic, kind or length.
Bytes unwrap(std::span<const std::uint8_t> file, ObjectKind expected);
ObjectKind peek_kind(std::span<const std::uint8_t> file);

std::string hex_dump(std::span<const std::uint8_t> bytes);

}  // namespace gaars::codec
