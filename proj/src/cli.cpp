#include "gaars/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>

#include "gaars/ars.hpp"
#include "gaars/codec.hpp"

namespace gaars::cli {
namespace {

using codec::Bytes;
using codec::ObjectKind;

struct Config {
  std::string backend = "realistic";
  unsigned lambda = 8;
  std::optional<std::uint64_t> seed;
  std::string mpk, msk, key, pk, ring, msg, sig, proof, claimed_pk;
  std::vector<std::string> members;
};

/// Raised for failures that map straight to an exit code.
struct Exit {
  int code;
  std::string message;
};

Bytes read_file(const std::string& path, const char* flag) {
  if (path.empty()) throw Exit{malformed, std::string("missing ") + flag};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{malformed, "cannot read " + path};
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const char* flag, ObjectKind kind, const Bytes& body) {
  if (path.empty()) throw Exit{malformed, std::string("missing ") + flag};
  const Bytes file = codec::wrap(kind, body);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(file.data()), static_cast<std::streamsize>(file.size()));
  if (!out) throw Exit{malformed, "cannot write " + path};
}

std::unique_ptr<GroupAction> make_backend(const std::string& name) {
  if (name == "realistic" || name == "ristretto255") return make_ristretto255_action();
  if (name == "tiny") return make_tiny_action();
  if (name == "modp2048") return make_modp2048_action();
  throw Exit{malformed, "unknown backend " + name};
}

class Session {
 public:
  explicit Session(const Config& cfg) : cfg_(cfg), action_(make_backend(cfg.backend)) {
    if (cfg.seed && cfg.backend != "tiny") throw Exit{malformed, "--seed is only accepted with --backend tiny"};
    if (cfg.lambda == 0) throw Exit{malformed, "--lambda must be at least 1"};
    params_.lambda = cfg.lambda;
    if (cfg.seed) {
      rng_ = std::make_unique<DeterministicRng>(*cfg.seed);
    } else {
      rng_ = std::make_unique<SystemRng>();
    }
  }

  const GroupAction& action() const { return *action_; }
  const ars::Params& params() const { return params_; }
  Rng& rng() { return *rng_; }

  /// Accepts a key-pair file as well as a bare public key.
  SetElement public_key(const std::string& path, const char* flag) const {
    const Bytes file = read_file(path, flag);
    if (codec::peek_kind(file) == ObjectKind::key_pair) return key_pair(path, flag).pk;
    return codec::decode_public_key(*action_, codec::unwrap(file, ObjectKind::public_key));
  }

  ars::KeyPair key_pair(const std::string& path, const char* flag) const {
    const auto [pk, sk] = codec::decode_key_pair(*action_, codec::unwrap(read_file(path, flag), ObjectKind::key_pair));
    if (action_->act(sk, action_->base_point()) != pk) throw Exit{key_relation, "key file: pk does not match sk"};
    return {pk, sk};
  }

  SetElement master_public_key(const std::string& path) const {
    const Bytes file = read_file(path, "--mpk");
    if (codec::peek_kind(file) == ObjectKind::master_key_pair) return master_key_pair(path, "--mpk").mpk;
    return codec::decode_public_key(*action_, codec::unwrap(file, ObjectKind::master_public_key));
  }

  ars::MasterKeyPair master_key_pair(const std::string& path, const char* flag) const {
    const auto [mpk, msk] =
        codec::decode_key_pair(*action_, codec::unwrap(read_file(path, flag), ObjectKind::master_key_pair));
    if (action_->act(msk, action_->base_point()) != mpk) {
      throw Exit{key_relation, "master key file: mpk does not match msk"};
    }
    return {mpk, msk};
  }

  std::vector<SetElement> ring() const {
    auto ring = codec::decode_ring(*action_, codec::unwrap(read_file(cfg_.ring, "--ring"), ObjectKind::ring));
    sigma::check_ring(*action_, ring);
    return ring;
  }

  /// Unparseable signatures are invalid signatures, not malformed requests.
  std::optional<ars::Signature> signature() const {
    const Bytes file = read_file(cfg_.sig, "--sig");
    try {
      return codec::decode_signature(*action_, codec::unwrap(file, ObjectKind::signature));
    } catch (const Error&) {
      return std::nullopt;
    }
  }

 private:
  const Config& cfg_;
  std::unique_ptr<GroupAction> action_;
  ars::Params params_;
  std::unique_ptr<Rng> rng_;
};

int cmd_mkeygen(const Config& cfg, std::ostream& out) {
  Session s(cfg);
  const auto master = ars::mkeygen(s.action(), s.rng());
  write_file(cfg.msk, "--msk", ObjectKind::master_key_pair, codec::encode_key_pair(master.mpk, master.msk));
  if (!cfg.mpk.empty()) write_file(cfg.mpk, "--mpk", ObjectKind::master_public_key, Bytes(master.mpk.bytes().begin(), master.mpk.bytes().end()));
  out << codec::fingerprint(master.mpk) << '\n';
  return ok;
}

int cmd_keygen(const Config& cfg, std::ostream& out) {
  Session s(cfg);
  const auto kp = ars::keygen(s.action(), s.rng());
  write_file(cfg.key, "--key", ObjectKind::key_pair, codec::encode_key_pair(kp.pk, kp.sk));
  if (!cfg.pk.empty()) write_file(cfg.pk, "--pk", ObjectKind::public_key, Bytes(kp.pk.bytes().begin(), kp.pk.bytes().end()));
  out << codec::fingerprint(kp.pk) << '\n';
  return ok;
}

int cmd_ring(const Config& cfg, std::ostream& out) {
  Session s(cfg);
  std::vector<SetElement> ring;
  for (const auto& path : cfg.members) ring.push_back(s.public_key(path, "member"));
  sigma::check_ring(s.action(), ring);
  write_file(cfg.ring, "--ring", ObjectKind::ring, codec::encode_ring(ring));
  for (const auto& pk : ring) out << codec::fingerprint(pk) << '\n';
  return ok;
}

int cmd_sign(const Config& cfg, std::ostream&) {
  Session s(cfg);
  const auto mpk = s.master_public_key(cfg.mpk);
  const auto kp = s.key_pair(cfg.key, "--key");
  const auto ring = s.ring();
  const Bytes msg = read_file(cfg.msg, "--msg");
  const auto sig = ars::sign(s.action(), mpk, ring, msg, kp.sk, s.params(), s.rng());
  write_file(cfg.sig, "--sig", ObjectKind::signature, codec::encode_signature(s.action(), sig));
  return ok;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  Session s(cfg);
  const auto mpk = s.master_public_key(cfg.mpk);
  const auto ring = s.ring();
  const Bytes msg = read_file(cfg.msg, "--msg");
  const auto sig = s.signature();
  const bool accepted = sig && ars::verify(s.action(), mpk, ring, msg, *sig, s.params());
  out << (accepted ? "valid" : "invalid") << '\n';
  return accepted ? ok : rejected;
}

int cmd_open(const Config& cfg, std::ostream& out) {
  Session s(cfg);
  const auto master = s.master_key_pair(cfg.msk, "--msk");
  const auto ring = s.ring();
  const Bytes msg = read_file(cfg.msg, "--msg");
  const Bytes sig_file = read_file(cfg.sig, "--sig");
  const auto sig = codec::decode_signature(s.action(), codec::unwrap(sig_file, ObjectKind::signature));
  const auto opening = ars::open_with_proof(s.action(), master.msk, ring, msg, sig, s.params(), s.rng());
  write_file(cfg.claimed_pk, "--claimed-pk", ObjectKind::opening, codec::encode_opening(opening.pk));
  write_file(cfg.proof, "--proof", ObjectKind::judge_proof, codec::encode_judge_proof(opening.proof));
  out << (opening.pk ? codec::fingerprint(*opening.pk) : std::string("bottom")) << '\n';
  return ok;
}

int cmd_judge(const Config& cfg, std::ostream& out) {
  Session s(cfg);
  const auto mpk = s.master_public_key(cfg.mpk);
  const auto ring = s.ring();
  const Bytes claim = read_file(cfg.claimed_pk, "--claimed-pk");
  std::optional<SetElement> pk;
  if (codec::peek_kind(claim) == ObjectKind::opening) {
    pk = codec::decode_opening(s.action(), codec::unwrap(claim, ObjectKind::opening));
  } else {
    pk = s.public_key(cfg.claimed_pk, "--claimed-pk");
  }
  const auto sig = s.signature();
  const Bytes proof_file = read_file(cfg.proof, "--proof");
  std::optional<ars::JudgeProof> proof;
  try {
    proof = codec::decode_judge_proof(s.action(), codec::unwrap(proof_file, ObjectKind::judge_proof));
  } catch (const Error&) {
  }
  const bool accepted = sig && proof && ars::judge(s.action(), mpk, ring, *sig, pk, *proof, s.params());
  if (accepted) {
    out << codec::fingerprint(*pk) << '\n';
  } else {
    out << "rejected\n";
  }
  return accepted ? ok : rejected;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Accountable ring signatures over group actions", "arsctl"};
  app.require_subcommand(1);
  app.add_option("--backend", cfg.backend, "realistic | tiny | modp2048")
      ->check(CLI::IsMember({"realistic", "ristretto255", "tiny", "modp2048"}));
  app.add_option("--lambda", cfg.lambda, "security parameter");
  app.add_option("--seed", cfg.seed, "deterministic randomness (tiny backend only)");
  app.add_option("--mpk", cfg.mpk, "master public key file");
  app.add_option("--msk", cfg.msk, "master key pair file");
  app.add_option("--key", cfg.key, "key pair file");
  app.add_option("--pk", cfg.pk, "public key output file (keygen)");
  app.add_option("--ring", cfg.ring, "ring file");
  app.add_option("--msg", cfg.msg, "message file (raw bytes)");
  app.add_option("--sig", cfg.sig, "signature file");
  app.add_option("--proof", cfg.proof, "judge proof file");
  app.add_option("--claimed-pk", cfg.claimed_pk, "opening result file");

  using Handler = int (*)(const Config&, std::ostream&);
  Handler handler = nullptr;
  auto add = [&](const char* name, const char* help, Handler h) {
    auto* sub = app.add_subcommand(name, help)->fallthrough();
    sub->callback([&handler, h] { handler = h; });
    return sub;
  };
  add("mkeygen", "generate a master key pair", cmd_mkeygen);
  add("keygen", "generate a member key pair", cmd_keygen);
  add("ring", "bundle public keys into a ring file", cmd_ring)->add_option("members", cfg.members, "key files");
  add("sign", "sign a message for a ring", cmd_sign);
  add("verify", "verify a signature", cmd_verify);
  add("open", "open a signature and prove the result", cmd_open);
  add("judge", "check an opening proof", cmd_judge);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return ok;
    }
    err << "arsctl: " << e.what() << '\n';
    return malformed;
  }

  try {
    return handler(cfg, out);
  } catch (const Exit& e) {
    err << "arsctl: " << e.message << '\n';
    return e.code;
  } catch (const Error& e) {
    err << "arsctl: " << e.what() << '\n';
    return e.code() == Errc::witness_not_in_ring ? key_relation : malformed;
  } catch (const std::exception& e) {
    err << "arsctl: " << e.what() << '\n';
    return malformed;
  }
}

}  // namespace gaars::cli
