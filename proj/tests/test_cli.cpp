#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include <unistd.h>

#include "gaars/ars.hpp"
#include "gaars/cli.hpp"
#include "gaars/codec.hpp"
#include "helpers.hpp"

using namespace gaars;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run arsctl(std::vector<std::string> args) {
  args.insert(args.begin(), "arsctl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::uint8_t> slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

struct Workspace {
  fs::path dir;
  Workspace() {
    static int counter = 0;
    dir = fs::temp_directory_path() / ("arsctl-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(dir);
  }
  ~Workspace() { fs::remove_all(dir); }
  std::string operator()(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("full flow on the default backend") {
    Workspace w;
    const std::vector<std::string> common{"--lambda", "2"};
    auto with = [&](std::vector<std::string> args) {
      args.insert(args.begin(), common.begin(), common.end());
      return arsctl(args);
    };
    const auto mk = with({"mkeygen", "--msk", w("master.key"), "--mpk", w("master.pub")});
    REQUIRE(mk.code == cli::ok);
    CHECK(mk.out.size() == 17);
    REQUIRE(with({"keygen", "--key", w("a.key")}).code == cli::ok);
    const auto kb = with({"keygen", "--key", w("b.key"), "--pk", w("b.pub")});
    REQUIRE(kb.code == cli::ok);
    REQUIRE(with({"ring", "--ring", w("ring"), w("a.key"), w("b.pub")}).code == cli::ok);
    spit(w("msg"), ::testing::bytes_of("hello"));

    REQUIRE(with({"sign", "--mpk", w("master.pub"), "--key", w("b.key"), "--ring", w("ring"), "--msg", w("msg"),
                  "--sig", w("sig")})
                .code == cli::ok);
    const auto v = with({"verify", "--mpk", w("master.pub"), "--ring", w("ring"), "--msg", w("msg"), "--sig", w("sig")});
    CHECK(v.code == cli::ok);
    CHECK(v.out == "valid\n");

    // Files decode with the library.
    const auto& a = ::testing::ristretto();
    const auto ring = codec::decode_ring(a, codec::unwrap(slurp(w("ring")), codec::ObjectKind::ring));
    const auto mpk = codec::decode_public_key(a, codec::unwrap(slurp(w("master.pub")), codec::ObjectKind::master_public_key));
    const auto sig = codec::decode_signature(a, codec::unwrap(slurp(w("sig")), codec::ObjectKind::signature));
    CHECK(ars::verify(a, mpk, ring, ::testing::bytes_of("hello"), sig, ars::Params{2}));
    CHECK(codec::fingerprint(ring[1]) + "\n" == kb.out);

    const auto op = with({"open", "--msk", w("master.key"), "--ring", w("ring"), "--msg", w("msg"), "--sig", w("sig"),
                          "--claimed-pk", w("claim"), "--proof", w("proof")});
    REQUIRE(op.code == cli::ok);
    CHECK(op.out == kb.out);
    const auto jd = with({"judge", "--mpk", w("master.pub"), "--ring", w("ring"), "--sig", w("sig"), "--claimed-pk",
                          w("claim"), "--proof", w("proof")});
    CHECK(jd.code == cli::ok);
    CHECK(jd.out == kb.out);
    REQUIRE(with({"keygen", "--key", w("c.key")}).code == cli::ok);
    const auto wrong = with({"judge", "--mpk", w("master.pub"), "--ring", w("ring"), "--sig", w("sig"),
                             "--claimed-pk", w("c.key"), "--proof", w("proof")});
    CHECK(wrong.code == cli::rejected);
    CHECK(wrong.out == "rejected\n");

    // One flipped byte in the signature body.
    auto bytes = slurp(w("sig"));
    bytes[bytes.size() / 2] ^= 0x01;
    spit(w("sig.bad"), bytes);
    const auto bad =
        with({"verify", "--mpk", w("master.pub"), "--ring", w("ring"), "--msg", w("msg"), "--sig", w("sig.bad")});
    CHECK(bad.code == cli::rejected);
    CHECK(bad.out == "invalid\n");

    spit(w("msg2"), ::testing::bytes_of("hellp"));
    CHECK(with({"verify", "--mpk", w("master.pub"), "--ring", w("ring"), "--msg", w("msg2"), "--sig", w("sig")}).code ==
          cli::rejected);
  }

  TEST_CASE("seeded tiny runs are reproducible") {
    Workspace w;
    const auto a1 = arsctl({"--backend", "tiny", "--seed", "5", "keygen", "--key", w("k1")});
    const auto a2 = arsctl({"--backend", "tiny", "--seed", "5", "keygen", "--key", w("k2")});
    REQUIRE(a1.code == cli::ok);
    CHECK(a1.out == a2.out);
    CHECK(slurp(w("k1")) == slurp(w("k2")));
  }

  TEST_CASE("exit codes") {
    Workspace w;
    CHECK(arsctl({"--seed", "5", "keygen", "--key", w("k")}).code == cli::malformed);
    CHECK(arsctl({"--backend", "nope", "keygen", "--key", w("k")}).code == cli::malformed);
    CHECK(arsctl({"keygen"}).code == cli::malformed);
    CHECK(arsctl({}).code == cli::malformed);
    CHECK(arsctl({"verify", "--mpk", w("missing"), "--ring", w("missing"), "--msg", w("missing"), "--sig", w("missing")})
              .code == cli::malformed);

    // A key file whose pk does not match its sk.
    const auto& a = ::testing::tiny();
    spit(w("bad.key"), codec::wrap(codec::ObjectKind::key_pair, codec::encode_key_pair(::testing::e(9), ::testing::g(5))));
    spit(w("good.key"), codec::wrap(codec::ObjectKind::key_pair, codec::encode_key_pair(::testing::e(9), ::testing::g(7))));
    spit(w("master.key"),
         codec::wrap(codec::ObjectKind::master_key_pair, codec::encode_key_pair(a.act(::testing::g(3), a.base_point()), ::testing::g(3))));
    spit(w("ring"), codec::wrap(codec::ObjectKind::ring, codec::encode_ring(::testing::ring_of({13, 16}))));
    spit(w("msg"), ::testing::bytes_of("m"));
    const std::vector<std::string> tiny{"--backend", "tiny", "--lambda", "1"};
    auto with = [&](std::vector<std::string> args) {
      args.insert(args.begin(), tiny.begin(), tiny.end());
      return arsctl(args);
    };
    CHECK(with({"sign", "--mpk", w("master.key"), "--key", w("bad.key"), "--ring", w("ring"), "--msg", w("msg"), "--sig",
                w("sig")})
              .code == cli::key_relation);
    // Signer not in the ring.
    CHECK(with({"sign", "--mpk", w("master.key"), "--key", w("good.key"), "--ring", w("ring"), "--msg", w("msg"), "--sig",
                w("sig")})
              .code == cli::key_relation);
    // Wrong container kind.
    CHECK(with({"verify", "--mpk", w("master.key"), "--ring", w("msg"), "--msg", w("msg"), "--sig", w("sig")}).code ==
          cli::malformed);
  }
}
