#include "gaars/codec.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace gaars::codec {
namespace {

constexpr std::uint8_t kMagic[4] = {'A', 'R', 'S', '1'};

void check_width(const GroupAction& action, const SetElement& e) {
  if (e.size() != action.set_element_size()) {
    throw Error(Errc::invalid_element, "set element width does not match backend");
  }
}

void check_width(const GroupAction& action, const GroupElement& e) {
  if (e.size() != action.group_element_size()) {
    throw Error(Errc::invalid_element, "group element width does not match backend");
  }
}

}  // namespace

TranscriptDigest transcript_digest(DomainTag tag, std::span<const std::uint8_t> input) {
  return TranscriptDigest{tag, Sha256().update_byte(static_cast<std::uint8_t>(tag)).update(input).finish()};
}

Bytes xof(DomainTag tag, std::span<const std::uint8_t> input, std::size_t length) {
  const Digest inner = sha256(input);
  Bytes out;
  out.reserve(length + 32);
  for (std::uint32_t block = 0; out.size() < length; ++block) {
    const Digest d = Sha256().update_byte(static_cast<std::uint8_t>(tag)).update_u32(block).update(inner).finish();
    out.insert(out.end(), d.begin(), d.end());
  }
  out.resize(length);
  return out;
}

std::vector<sigma::Challenge> challenges_from_bytes(std::span<const std::uint8_t> bytes, std::size_t t) {
  if (bytes.size() * 4 < t) throw Error(Errc::length_mismatch, "not enough bytes for challenges");
  std::vector<sigma::Challenge> out;
  out.reserve(t);
  for (std::size_t j = 0; j < t; ++j) {
    const int bits = (bytes[j / 4] >> (6 - 2 * (j % 4))) & 0x3;
    out.emplace_back(bits + 1);
  }
  return out;
}

std::vector<std::uint8_t> bits_from_bytes(std::span<const std::uint8_t> bytes, std::size_t count) {
  if (bytes.size() * 8 < count) throw Error(Errc::length_mismatch, "not enough bytes for bits");
  std::vector<std::uint8_t> out(count);
  for (std::size_t j = 0; j < count; ++j) out[j] = (bytes[j / 8] >> (7 - j % 8)) & 1u;
  return out;
}

// ---- Writer / Reader --------------------------------------------------------

Writer& Writer::u8(std::uint8_t v) {
  out_.push_back(v);
  return *this;
}

Writer& Writer::u32(std::uint32_t v) {
  for (int s = 24; s >= 0; s -= 8) out_.push_back(static_cast<std::uint8_t>(v >> s));
  return *this;
}

Writer& Writer::raw(std::span<const std::uint8_t> bytes) {
  out_.insert(out_.end(), bytes.begin(), bytes.end());
  return *this;
}

std::span<const std::uint8_t> Reader::raw(std::size_t n) {
  if (data_.size() - pos_ < n) throw Error(Errc::malformed_encoding, "truncated input");
  auto out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

std::uint8_t Reader::u8() { return raw(1)[0]; }

std::uint32_t Reader::u32() {
  const auto b = raw(4);
  return std::uint32_t(b[0]) << 24 | std::uint32_t(b[1]) << 16 | std::uint32_t(b[2]) << 8 | b[3];
}

std::size_t Reader::count(std::size_t min_item_bytes) {
  const std::size_t n = u32();
  if (min_item_bytes > 0 && n > (data_.size() - pos_) / min_item_bytes) {
    throw Error(Errc::malformed_encoding, "count exceeds remaining input");
  }
  return n;
}

GroupElement Reader::group() { return action_.decode_group(raw(action_.group_element_size())); }

SetElement Reader::set() { return action_.decode_set(raw(action_.set_element_size())); }

std::span<const std::uint8_t> Reader::rest() { return raw(data_.size() - pos_); }

void Reader::expect_done() const {
  if (!done()) throw Error(Errc::malformed_encoding, "trailing bytes after object");
}

// ---- sigma objects ----------------------------------------------------------

void write_commitment(const GroupAction& action, Writer& w, const sigma::Commitment& com) {
  const std::size_t n = com.betas.size();
  if (n == 0 || com.alphas.size() != n || com.gammas.size() != n) {
    throw Error(Errc::invalid_element, "commitment lists must share a non-zero length");
  }
  w.u32(static_cast<std::uint32_t>(n));
  for (const auto* list : {&com.alphas, &com.betas, &com.gammas}) {
    for (const auto& e : *list) {
      check_width(action, e);
      w.element(e);
    }
  }
  check_width(action, com.e_open);
  check_width(action, com.e_check);
  w.element(com.e_open).element(com.e_check);
}

Bytes encode_commitment(const GroupAction& action, const sigma::Commitment& com) {
  Writer w;
  write_commitment(action, w, com);
  return w.take();
}

sigma::Commitment read_commitment(Reader& r) {
  sigma::Commitment com;
  const std::size_t n = r.count(3);
  if (n == 0) throw Error(Errc::malformed_encoding, "empty commitment");
  for (auto* list : {&com.alphas, &com.betas, &com.gammas}) {
    list->reserve(n);
    for (std::size_t i = 0; i < n; ++i) list->push_back(r.set());
  }
  com.e_open = r.set();
  com.e_check = r.set();
  return com;
}

sigma::Commitment decode_commitment(const GroupAction& action, std::span<const std::uint8_t> bytes) {
  Reader r(action, bytes);
  auto com = read_commitment(r);
  r.expect_done();
  return com;
}

void write_response(Writer& w, const sigma::Response& resp) {
  w.u8(static_cast<std::uint8_t>(sigma::response_challenge(resp)));
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, sigma::DeltasResponse> ||
                      std::is_same_v<T, sigma::DeltaPrimesResponse>) {
          w.u32(static_cast<std::uint32_t>(v.values.size()));
          for (const auto& g : v.values) w.element(g);
        } else {
          w.element(v.value);
        }
      },
      resp);
}

sigma::Response read_response(Reader& r) {
  const int tag = r.u8();
  auto list = [&r] {
    std::vector<GroupElement> values(r.count(1));
    for (auto& g : values) g = r.group();
    return values;
  };
  switch (tag) {
    case 1: return sigma::DeltasResponse{list()};
    case 2: return sigma::DeltaPrimesResponse{list()};
    case 3: return sigma::BResponse{r.group()};
    case 4: return sigma::LResponse{r.group()};
    default: throw Error(Errc::malformed_encoding, "unknown response tag");
  }
}

// ---- signatures and proofs --------------------------------------------------

Bytes encode_signature(const GroupAction& action, const ars::Signature& sig) {
  const std::size_t t = sig.coms.size();
  if (sig.chs.size() != t || sig.resps.size() != t) {
    throw Error(Errc::length_mismatch, "signature vectors disagree on session count");
  }
  Writer w;
  w.u32(static_cast<std::uint32_t>(t));
  for (const auto& com : sig.coms) write_commitment(action, w, com);
  for (const auto& ch : sig.chs) w.u8(static_cast<std::uint8_t>(ch.value()));
  for (const auto& resp : sig.resps) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, sigma::DeltasResponse> ||
                        std::is_same_v<T, sigma::DeltaPrimesResponse>) {
            for (const auto& g : v.values) check_width(action, g);
          } else {
            check_width(action, v.value);
          }
        },
        resp);
    write_response(w, resp);
  }
  return w.take();
}

ars::Signature decode_signature(const GroupAction& action, std::span<const std::uint8_t> bytes) {
  Reader r(action, bytes);
  ars::Signature sig;
  const std::size_t t = r.count(1);
  sig.coms.reserve(t);
  for (std::size_t j = 0; j < t; ++j) sig.coms.push_back(read_commitment(r));
  sig.chs.reserve(t);
  for (std::size_t j = 0; j < t; ++j) {
    const int v = r.u8();
    if (v < 1 || v > 4) throw Error(Errc::malformed_encoding, "challenge byte out of range");
    sig.chs.emplace_back(v);
  }
  sig.resps.reserve(t);
  for (std::size_t j = 0; j < t; ++j) sig.resps.push_back(read_response(r));
  r.expect_done();
  return sig;
}

Bytes encode_judge_commitment(const ars::JudgeCommitment& jcom) {
  Writer w;
  w.element(jcom.e_judge).element(jcom.e_bm);
  return w.take();
}

Bytes encode_judge_proof(const ars::JudgeProof& proof) {
  if (proof.entries.size() != proof.repetitions * proof.sessions) {
    throw Error(Errc::length_mismatch, "judge proof matrix has wrong size");
  }
  Writer w;
  w.u32(static_cast<std::uint32_t>(proof.repetitions)).u32(static_cast<std::uint32_t>(proof.sessions));
  for (const auto& e : proof.entries) {
    w.element(e.jcom.e_judge).element(e.jcom.e_bm).u8(e.jch).element(e.jresp);
  }
  return w.take();
}

ars::JudgeProof decode_judge_proof(const GroupAction& action, std::span<const std::uint8_t> bytes) {
  Reader r(action, bytes);
  ars::JudgeProof proof;
  proof.repetitions = r.u32();
  proof.sessions = r.u32();
  const std::size_t entry_bytes = 2 * action.set_element_size() + 1 + action.group_element_size();
  const std::size_t remaining = bytes.size() - 8;
  if (proof.sessions != 0 && proof.repetitions > remaining / entry_bytes / proof.sessions) {
    throw Error(Errc::malformed_encoding, "judge proof dimensions exceed input");
  }
  proof.entries.resize(proof.repetitions * proof.sessions);
  for (auto& e : proof.entries) {
    e.jcom.e_judge = r.set();
    e.jcom.e_bm = r.set();
    e.jch = r.u8();
    if (e.jch > 1) throw Error(Errc::malformed_encoding, "judge challenge is not a bit");
    e.jresp = r.group();
  }
  r.expect_done();
  return proof;
}

Bytes encode_ring(std::span<const SetElement> ring) {
  Writer w;
  w.u32(static_cast<std::uint32_t>(ring.size()));
  for (const auto& e : ring) w.element(e);
  return w.take();
}

std::vector<SetElement> decode_ring(const GroupAction& action, std::span<const std::uint8_t> bytes) {
  Reader r(action, bytes);
  std::vector<SetElement> ring(r.count(action.set_element_size()));
  for (auto& e : ring) e = r.set();
  r.expect_done();
  return ring;
}

Bytes encode_key_pair(const SetElement& pk, const GroupElement& sk) {
  Writer w;
  w.element(pk).element(sk);
  return w.take();
}

std::pair<SetElement, GroupElement> decode_key_pair(const GroupAction& action,
                                                    std::span<const std::uint8_t> bytes) {
  Reader r(action, bytes);
  SetElement pk = r.set();
  GroupElement sk = r.group();
  r.expect_done();
  return {pk, sk};
}

SetElement decode_public_key(const GroupAction& action, std::span<const std::uint8_t> bytes) {
  Reader r(action, bytes);
  SetElement pk = r.set();
  r.expect_done();
  return pk;
}

Bytes encode_opening(const std::optional<SetElement>& pk) {
  Writer w;
  if (pk) {
    w.u8(1).element(*pk);
  } else {
    w.u8(0);
  }
  return w.take();
}

std::optional<SetElement> decode_opening(const GroupAction& action, std::span<const std::uint8_t> bytes) {
  Reader r(action, bytes);
  const auto flag = r.u8();
  std::optional<SetElement> out;
  if (flag == 1) {
    out = r.set();
  } else if (flag != 0) {
    throw Error(Errc::malformed_encoding, "opening flag must be 0 or 1");
  }
  r.expect_done();
  return out;
}

// ---- Fiat-Shamir ------------------------------------------------------------

Bytes hash_input_for_challenges(const GroupAction& action, std::span<const sigma::Commitment> coms,
                                std::span<const std::uint8_t> message) {
  Writer w;
  for (const auto& com : coms) write_commitment(action, w, com);
  w.raw(message);
  return w.take();
}

std::vector<sigma::Challenge> derive_challenges(const GroupAction& action,
                                                std::span<const sigma::Commitment> coms,
                                                std::span<const std::uint8_t> message, std::size_t t) {
  const Bytes input = hash_input_for_challenges(action, coms, message);
  return challenges_from_bytes(xof(DomainTag::signature_challenges, input, (t + 3) / 4), t);
}

std::vector<std::uint8_t> derive_judge_challenges(const GroupAction& action, const ars::Signature& sig,
                                                  std::span<const ars::JudgeCommitment> jcoms) {
  Writer w;
  w.raw(encode_signature(action, sig));
  for (const auto& jcom : jcoms) w.element(jcom.e_judge).element(jcom.e_bm);
  const std::size_t count = jcoms.size();
  return bits_from_bytes(xof(DomainTag::judge_challenges, w.bytes(), (count + 7) / 8), count);
}

std::string fingerprint(const SetElement& pk) {
  const Digest d = Sha256().update_byte(static_cast<std::uint8_t>(DomainTag::key_fingerprint)).update(pk.bytes()).finish();
  return to_hex(std::span(d.data(), 8));
}

// ---- container --------------------------------------------------------------

std::string_view object_kind_name(ObjectKind kind) noexcept {
  switch (kind) {
    case ObjectKind::public_key: return "public-key";
    case ObjectKind::key_pair: return "key-pair";
    case ObjectKind::master_public_key: return "master-public-key";
    case ObjectKind::master_key_pair: return "master-key-pair";
    case ObjectKind::ring: return "ring";
    case ObjectKind::signature: return "signature";
    case ObjectKind::judge_proof: return "judge-proof";
    case ObjectKind::opening: return "opening";
    case ObjectKind::group_public_key: return "group-public-key";
  }
  return "unknown";
}

Bytes wrap(ObjectKind kind, std::span<const std::uint8_t> body) {
  Writer w;
  w.raw(kMagic).u8(static_cast<std::uint8_t>(kind)).u32(static_cast<std::uint32_t>(body.size())).raw(body);
  return w.take();
}

ObjectKind peek_kind(std::span<const std::uint8_t> file) {
  if (file.size() < 9 || !std::equal(std::begin(kMagic), std::end(kMagic), file.begin())) {
    throw Error(Errc::malformed_encoding, "missing ARS1 magic");
  }
  const auto kind = static_cast<ObjectKind>(file[4]);
  if (object_kind_name(kind) == "unknown") throw Error(Errc::malformed_encoding, "unknown object kind");
  return kind;
}

Bytes unwrap(std::span<const std::uint8_t> file, ObjectKind expected) {
  const ObjectKind kind = peek_kind(file);
  if (kind != expected) {
    throw Error(Errc::malformed_encoding, "expected " + std::string(object_kind_name(expected)) +
                                              ", found " + std::string(object_kind_name(kind)));
  }
  const std::size_t length = std::size_t(file[5]) << 24 | std::size_t(file[6]) << 16 |
                             std::size_t(file[7]) << 8 | file[8];
  if (file.size() - 9 != length) throw Error(Errc::malformed_encoding, "container length mismatch");
  return Bytes(file.begin() + 9, file.end());
}

std::string hex_dump(std::span<const std::uint8_t> bytes) {
  std::ostringstream out;
  char line[16];
  for (std::size_t off = 0; off < bytes.size(); off += 16) {
    std::snprintf(line, sizeof line, "%08zx ", off);
    out << line;
    const std::size_t end = std::min(bytes.size(), off + 16);
    for (std::size_t i = off; i < off + 16; ++i) {
      if (i < end) {
        std::snprintf(line, sizeof line, " %02x", bytes[i]);
        out << line;
      } else {
        out << "   ";
      }
    }
    out << "  |";
    for (std::size_t i = off; i < end; ++i) {
      out << static_cast<char>(bytes[i] >= 0x20 && bytes[i] < 0x7f ? bytes[i] : '.');
    }
    out << "|\n";
  }
  return out.str();
}

}  // namespace gaars::codec
