#include <doctest.h>

#include <algorithm>

#include "derived_fixtures.hpp"
#include "gaars/ars.hpp"
#include "gaars/codec.hpp"
#include "helpers.hpp"

using namespace gaars;
using testing::e;
using testing::g;

namespace {

struct TinySetup {
  ars::MasterKeyPair master = ars::master_from_secret(testing::tiny(), g(3));
  std::vector<SetElement> ring = testing::ring_of({9, 13});
  GroupElement sk = g(7);
};

std::size_t expected_size(const ars::Signature& sig, std::size_t n) {
  std::size_t size = 4;
  for (std::size_t j = 0; j < sig.sessions(); ++j) {
    size += 4 + 3 * n + 2 + 1;
    size += sig.chs[j].value() <= 2 ? 1 + 4 + n : 2;
  }
  return size;
}

}  // namespace

TEST_SUITE("ars") {
  TEST_CASE("key generation") {
    const auto& a = testing::tiny();
    const auto kp = ars::keypair_from_secret(a, g(5));
    CHECK(kp.pk == e(9));
    CHECK(kp.sk == g(5));
    DeterministicRng rng(1);
    for (int i = 0; i < 50; ++i) {
      const auto k = ars::keygen(a, rng);
      CHECK(a.validate_set_element(k.pk));
      CHECK(a.act(k.sk, a.base_point()) == k.pk);
      const auto m = ars::mkeygen(a, rng);
      CHECK(a.act(m.msk, a.base_point()) == m.mpk);
    }
    DeterministicRng r1(1), r2(2);
    const auto& r = testing::ristretto();
    CHECK(ars::keygen(r, r1).pk != ars::keygen(r, r2).pk);
  }

  TEST_CASE("session count") {
    TinySetup s;
    DeterministicRng rng(3);
    const ars::Params params{2};
    const auto sig = ars::sign(testing::tiny(), s.master.mpk, s.ring, testing::bytes_of("m"), s.sk, params, rng);
    CHECK(sig.sessions() == 8);
    CHECK(sig.chs.size() == 8);
    CHECK(sig.resps.size() == 8);
    CHECK(params.sessions(3) == 12);
    CHECK(params.judge_repetitions() == 2);
  }

  TEST_CASE("seeded signature matches the reference") {
    TinySetup s;
    DeterministicRng rng(2024);
    const ars::Params params{2, 1};
    const auto msg = testing::bytes_of("fixture");
    const auto sig = ars::sign(testing::tiny(), s.master.mpk, s.ring, msg, s.sk, params, rng);
    CHECK(to_hex(codec::encode_signature(testing::tiny(), sig)) == fixtures::SEEDED_SIG_HEX);
    const auto outs = ars::open_sessions(testing::tiny(), s.master.msk, s.ring, sig, params);
    for (std::size_t j = 0; j < outs.size(); ++j) {
      REQUIRE(outs[j].has_value());
      CHECK(testing::value(*outs[j]) == fixtures::SEEDED_SESSION_OPENINGS[j]);
    }
    CHECK(ars::verify(testing::tiny(), s.master.mpk, s.ring, msg, sig, params));
    CHECK(ars::open(testing::tiny(), s.master.msk, s.ring, msg, sig, params) == e(fixtures::SEEDED_OPENED));
  }

  TEST_CASE("parallel and serial signing agree") {
    const auto& a = testing::ristretto();
    DeterministicRng keys(4);
    const auto master = ars::mkeygen(a, keys);
    const auto k0 = ars::keygen(a, keys);
    const auto k1 = ars::keygen(a, keys);
    const std::vector<SetElement> ring{k0.pk, k1.pk};
    const auto msg = testing::bytes_of("parallel");
    DeterministicRng r1(9), r2(9);
    const auto serial = ars::sign(a, master.mpk, ring, msg, k0.sk, ars::Params{2, 1}, r1);
    const auto parallel = ars::sign(a, master.mpk, ring, msg, k0.sk, ars::Params{2, 4}, r2);
    CHECK(codec::encode_signature(a, serial) == codec::encode_signature(a, parallel));
    CHECK(ars::verify(a, master.mpk, ring, msg, parallel, ars::Params{2, 3}));
    CHECK(ars::open(a, master.msk, ring, msg, parallel, ars::Params{2, 2}) == k0.pk);
  }

  TEST_CASE("verification binds message and session order") {
    TinySetup s;
    const auto& a = testing::tiny();
    DeterministicRng rng(5);
    const ars::Params params{2};
    auto msg = testing::bytes_of("bind me");
    const auto sig = ars::sign(a, s.master.mpk, s.ring, msg, s.sk, params, rng);
    REQUIRE(ars::verify(a, s.master.mpk, s.ring, msg, sig, params));

    for (std::size_t bit = 0; bit < msg.size() * 8; ++bit) {
      auto flipped = msg;
      flipped[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
      CHECK_FALSE(ars::verify(a, s.master.mpk, s.ring, flipped, sig, params));
    }

    std::size_t differing = 1;
    while (sig.coms[differing] == sig.coms[0]) ++differing;
    auto swapped = sig;
    std::swap(swapped.coms[0], swapped.coms[differing]);
    CHECK_FALSE(ars::verify(a, s.master.mpk, s.ring, msg, swapped, params));

    CHECK_FALSE(ars::verify(a, s.master.mpk, s.ring, msg, sig, ars::Params{3}));
    CHECK_FALSE(ars::verify(a, e(5), s.ring, msg, sig, params));
    CHECK_FALSE(ars::verify(a, s.master.mpk, testing::ring_of({9, 9}), msg, sig, params));
    CHECK_FALSE(ars::verify(a, s.master.mpk, testing::ring_of({9, 13, 2}), msg, sig, params));
    CHECK_FALSE(ars::verify(a, s.master.mpk, s.ring, msg, ars::Signature{}, params));

    auto wrong_resp = sig;
    wrong_resp.resps[0] = sigma::LResponse{g(1)};
    CHECK_FALSE(ars::verify(a, s.master.mpk, s.ring, msg, wrong_resp, params));
  }

  TEST_CASE("sign preconditions") {
    TinySetup s;
    const auto& a = testing::tiny();
    DeterministicRng rng(6);
    const auto msg = testing::bytes_of("x");
    CHECK_ERRC(ars::sign(a, s.master.mpk, s.ring, msg, g(2), ars::Params{1}, rng), Errc::witness_not_in_ring);
    CHECK_ERRC(ars::sign(a, s.master.mpk, testing::ring_of({13, 13}), msg, s.sk, ars::Params{1}, rng),
               Errc::duplicate_statement);
    CHECK_ERRC(ars::sign(a, e(5), s.ring, msg, s.sk, ars::Params{1}, rng), Errc::invalid_element);
    CHECK_ERRC(ars::sign(a, s.master.mpk, s.ring, msg, s.sk, ars::Params{0}, rng), Errc::length_mismatch);
  }

  TEST_CASE("maj") {
    const std::optional<SetElement> A = e(2), B = e(3), bot = std::nullopt;
    CHECK(ars::maj(std::vector{A, A, B}) == A);
    CHECK(ars::maj(std::vector{A, B}) == A);
    CHECK(ars::maj(std::vector{B, A}) == A);
    CHECK(ars::maj(std::vector{bot, bot, A}) == bot);
    CHECK(ars::maj(std::vector{bot, A}) == bot);
    CHECK(ars::maj(std::vector{A, bot, B, B}) == B);
    CHECK(ars::maj(std::vector{bot}) == bot);
    CHECK_ERRC(ars::maj(std::vector<std::optional<SetElement>>{}), Errc::length_mismatch);

    DeterministicRng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::optional<SetElement>> outs;
      for (int i = 0; i < 9; ++i) {
        const auto v = rng.uniform_index(4);
        outs.push_back(v == 0 ? bot : std::optional<SetElement>(e(static_cast<int>(v) + 1)));
      }
      const auto expected = ars::maj(outs);
      for (int p = 0; p < 5; ++p) {
        for (std::size_t i = outs.size(); i > 1; --i) std::swap(outs[i - 1], outs[rng.uniform_index(i)]);
        REQUIRE(ars::maj(outs) == expected);
      }
    }
  }

  TEST_CASE("open") {
    TinySetup s;
    const auto& a = testing::tiny();
    DeterministicRng rng(8);
    const ars::Params params{2};
    const auto msg = testing::bytes_of("open me");
    auto sig = ars::sign(a, s.master.mpk, s.ring, msg, s.sk, params, rng);
    CHECK(ars::open(a, s.master.msk, s.ring, msg, sig, params) == e(13));

    // Point every opening tag at an element no beta maps to.
    for (auto& com : sig.coms) {
      for (const auto& cand : a.set_elements()) {
        if (std::none_of(com.betas.begin(), com.betas.end(),
                         [&](const SetElement& b) { return a.act(s.master.msk, b) == cand; })) {
          com.e_open = cand;
          break;
        }
      }
    }
    CHECK_FALSE(ars::open(a, s.master.msk, s.ring, msg, sig, params).has_value());
    CHECK_ERRC(ars::open(a, s.master.msk, testing::ring_of({9, 13, 2}), msg, sig, params), Errc::length_mismatch);
  }

  TEST_CASE("correctness across random keys") {
    for (const GroupAction* a : {&testing::tiny(), &testing::ristretto()}) {
      DeterministicRng rng(10);
      const ars::Params params{2};
      for (int trial = 0; trial < 20; ++trial) {
        const auto master = ars::mkeygen(*a, rng);
        std::vector<ars::KeyPair> keys;
        while (keys.size() < 3) {
          auto kp = ars::keygen(*a, rng);
          if (std::none_of(keys.begin(), keys.end(), [&](const auto& k) { return k.pk == kp.pk; })) {
            keys.push_back(kp);
          }
        }
        std::vector<SetElement> ring;
        for (const auto& k : keys) ring.push_back(k.pk);
        const auto& signer = keys[trial % 3];
        const auto msg = testing::bytes_of("trial " + std::to_string(trial));
        const auto sig = ars::sign(*a, master.mpk, ring, msg, signer.sk, params, rng);
        REQUIRE(ars::verify(*a, master.mpk, ring, msg, sig, params));
        REQUIRE(ars::open(*a, master.msk, ring, msg, sig, params) == signer.pk);
      }
    }
  }

  TEST_CASE("signature size grows with lambda and ring size") {
    const auto& a = testing::tiny();
    DeterministicRng rng(11);
    const auto master = ars::master_from_secret(a, g(3));
    const auto all = a.set_elements();
    for (std::size_t n = 1; n <= 4; ++n) {
      const std::vector<SetElement> ring(all.begin(), all.begin() + n);
      const auto sk = a.solve_action_brute(a.base_point(), ring[0]);
      for (unsigned lambda = 1; lambda <= 3; ++lambda) {
        const auto sig = ars::sign(a, master.mpk, ring, testing::bytes_of("size"), sk, ars::Params{lambda}, rng);
        CHECK(sig.sessions() == 2 * lambda * n);
        CHECK(codec::encode_signature(a, sig).size() == expected_size(sig, n));
      }
    }
  }
}
