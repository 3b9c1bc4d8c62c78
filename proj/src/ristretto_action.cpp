// Scalar multiplication on the ristretto255 prime-order group, read as an
// action of (Z/l)^* on the non-identity points: a . P = [a]P. Scalars travel
// big-endian like every other group element; libsodium wants little-endian.

#include <sodium.h>

#include <algorithm>

#include "gaars/group_action.hpp"
#include "gaars/hash.hpp"

namespace gaars {
namespace {

constexpr std::size_t kWidth = 32;

using Bytes32 = std::array<std::uint8_t, kWidth>;

Bytes32 reversed(std::span<const std::uint8_t> in) {
  Bytes32 out;
  std::reverse_copy(in.begin(), in.end(), out.begin());
  return out;
}

class RistrettoAction final : public GroupAction {
 public:
  RistrettoAction() {
    ensure_sodium();
    params_.backend = BackendId::ristretto255;
    params_.modulus = from_hex("7fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffed");
    params_.order = from_hex("1000000000000000000000000000000014def9dea2f79cd65812631a5cf5d3ed");
    params_.security_level = 128;
    Bytes32 one{};
    one[0] = 1;
    Bytes32 base;
    if (crypto_scalarmult_ristretto255_base(base.data(), one.data()) != 0) {
      throw Error(Errc::invalid_element, "ristretto255: base point derivation failed");
    }
    params_.generator = SetElement(base);
    params_.base_point = params_.generator;
  }

  const ActionParams& params() const noexcept override { return params_; }
  std::size_t group_element_size() const noexcept override { return kWidth; }
  std::size_t set_element_size() const noexcept override { return kWidth; }

  GroupElement identity() const override {
    Bytes32 one{};
    one[kWidth - 1] = 1;
    return GroupElement(one);
  }

  GroupElement compose(const GroupElement& a, const GroupElement& b) const override {
    const Bytes32 la = scalar_le(a);
    const Bytes32 lb = scalar_le(b);
    Bytes32 r;
    crypto_core_ristretto255_scalar_mul(r.data(), la.data(), lb.data());
    return GroupElement(reversed(r));
  }

  GroupElement invert(const GroupElement& a) const override {
    const Bytes32 la = scalar_le(a);
    Bytes32 r;
    if (crypto_core_ristretto255_scalar_invert(r.data(), la.data()) != 0) {
      throw Error(Errc::invalid_element, "ristretto255: zero scalar");
    }
    return GroupElement(reversed(r));
  }

  SetElement act(const GroupElement& a, const SetElement& e) const override {
    const Bytes32 la = scalar_le(a);
    if (e.size() != kWidth) throw Error(Errc::invalid_element, "ristretto255: wrong point width");
    Bytes32 r;
    int rc;
    if (e == params_.base_point) {
      rc = crypto_scalarmult_ristretto255_base(r.data(), la.data());
    } else {
      rc = crypto_scalarmult_ristretto255(r.data(), la.data(), e.bytes().data());
    }
    if (rc != 0) throw Error(Errc::invalid_element, "ristretto255: invalid point");
    return SetElement(r);
  }

  GroupElement sample_group(Rng& rng) const override {
    return GroupElement(sample_nonzero_below(params_.order, rng));
  }

  bool validate_group_element(const GroupElement& a) const noexcept override {
    if (a.size() != kWidth) return false;
    const auto b = a.bytes();
    const bool zero = std::all_of(b.begin(), b.end(), [](auto x) { return x == 0; });
    return !zero && std::lexicographical_compare(b.begin(), b.end(), params_.order.begin(),
                                                 params_.order.end());
  }

  bool validate_set_element(const SetElement& e) const noexcept override {
    if (e.size() != kWidth) return false;
    const auto b = e.bytes();
    if (std::all_of(b.begin(), b.end(), [](auto x) { return x == 0; })) return false;
    return crypto_core_ristretto255_is_valid_point(b.data()) == 1;
  }

 private:
  Bytes32 scalar_le(const GroupElement& a) const {
    if (!validate_group_element(a)) throw Error(Errc::invalid_element, "ristretto255: scalar out of range");
    return reversed(a.bytes());
  }

  ActionParams params_;
};

}  // namespace

std::unique_ptr<GroupAction> make_ristretto255_action() { return std::make_unique<RistrettoAction>(); }

}  // namespace gaars
