// Exponentiation action over a prime-order subgroup of (Z/p)^*:
// a . E = E^a mod p, with a in (Z/q)^* and E in <g> \ {1}.

#include <gmpxx.h>

#include <string>

#include "gaars/group_action.hpp"

namespace gaars {
namespace {

// RFC 3526 group 14: a 2048-bit safe prime, g = 2 generates the subgroup of
// order q = (p-1)/2.
constexpr std::string_view kRfc3526Prime2048 =
    "FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD129024E088A67CC74020BBEA63B139B22"
    "514A08798E3404DDEF9519B3CD3A431B302B0A6DF25F14374FE1356D6D51C245E485B576625E7EC6"
    "F44C42E9A637ED6B0BFF5CB6F406B7EDEE386BFB5A899FA5AE9F24117C4B1FE649286651ECE45B3D"
    "C2007CB8A163BF0598DA48361C55D39A69163FA8FD24CF5F83655D23DCA3AD961C62F356208552BB"
    "9ED529077096966D670C354E4ABC9804F1746C08CA18217C32905E462E36CE3BE39E772C180E8603"
    "9B2783A2EC07A28FB5C55DF06F4C52C9DE2BCBF6955817183995497CEA956AE515D2261898FA0510"
    "15728E5A8AACAA68FFFFFFFFFFFFFFFF";

std::size_t byte_length(const mpz_class& v) { return (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8; }

std::vector<std::uint8_t> export_fixed(const mpz_class& v, std::size_t width) {
  std::vector<std::uint8_t> out(width, 0);
  std::size_t count = 0;
  const std::size_t need = byte_length(v);
  if (need > width) throw Error(Errc::invalid_element, "value wider than encoding");
  if (v != 0) mpz_export(out.data() + (width - need), &count, 1, 1, 1, 0, v.get_mpz_t());
  return out;
}

mpz_class import_bytes(std::span<const std::uint8_t> bytes) {
  mpz_class v;
  mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  return v;
}

class ModPAction final : public GroupAction {
 public:
  ModPAction(BackendId tag, mpz_class p, mpz_class q, const mpz_class& g, const mpz_class& base,
             unsigned security_level)
      : p_(std::move(p)), q_(std::move(q)), set_width_(byte_length(p_)), group_width_(byte_length(q_)) {
    if (q_ < 2 || p_ < 3 || mpz_divisible_p(mpz_class(p_ - 1).get_mpz_t(), q_.get_mpz_t()) == 0) {
      throw Error(Errc::invalid_element, "modp parameters: q must divide p-1");
    }
    if (mpz_probab_prime_p(p_.get_mpz_t(), 30) == 0 || mpz_probab_prime_p(q_.get_mpz_t(), 30) == 0) {
      throw Error(Errc::invalid_element, "modp parameters: p and q must be prime");
    }
    params_.backend = tag;
    params_.modulus = export_fixed(p_, set_width_);
    params_.order = export_fixed(q_, group_width_);
    params_.security_level = security_level;
    params_.generator = to_set(g);
    params_.base_point = to_set(base);
    if (!validate_set_element(params_.generator)) {
      throw Error(Errc::invalid_element, "modp parameters: g must have order q");
    }
    if (!validate_set_element(params_.base_point)) {
      throw Error(Errc::invalid_element, "modp parameters: base point outside <g> \\ {1}");
    }
  }

  const ActionParams& params() const noexcept override { return params_; }
  std::size_t group_element_size() const noexcept override { return group_width_; }
  std::size_t set_element_size() const noexcept override { return set_width_; }

  GroupElement identity() const override { return to_group(1); }

  GroupElement compose(const GroupElement& a, const GroupElement& b) const override {
    mpz_class r = group_value(a) * group_value(b);
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), q_.get_mpz_t());
    return to_group(r);
  }

  GroupElement invert(const GroupElement& a) const override {
    mpz_class r;
    mpz_invert(r.get_mpz_t(), group_value(a).get_mpz_t(), q_.get_mpz_t());
    return to_group(r);
  }

  SetElement act(const GroupElement& a, const SetElement& e) const override {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), set_value(e).get_mpz_t(), group_value(a).get_mpz_t(), p_.get_mpz_t());
    return to_set(r);
  }

  GroupElement sample_group(Rng& rng) const override {
    return GroupElement(sample_nonzero_below(params_.order, rng));
  }

  bool validate_group_element(const GroupElement& a) const noexcept override {
    if (a.size() != group_width_) return false;
    const mpz_class v = import_bytes(a.bytes());
    return v > 0 && v < q_;
  }

  bool validate_set_element(const SetElement& e) const noexcept override {
    if (e.size() != set_width_) return false;
    const mpz_class v = import_bytes(e.bytes());
    if (v <= 1 || v >= p_) return false;
    mpz_class r;
    mpz_powm(r.get_mpz_t(), v.get_mpz_t(), q_.get_mpz_t(), p_.get_mpz_t());
    return r == 1;
  }

  bool enumerable() const noexcept override { return q_ <= 1 << 16; }

  std::vector<GroupElement> group_elements() const override {
    if (!enumerable()) return GroupAction::group_elements();
    std::vector<GroupElement> out;
    for (mpz_class a = 1; a < q_; ++a) out.push_back(to_group(a));
    return out;
  }

  std::vector<SetElement> set_elements() const override {
    if (!enumerable()) return GroupAction::set_elements();
    std::vector<SetElement> out;
    for (const auto& a : group_elements()) out.push_back(act(a, params_.generator));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  mpz_class group_value(const GroupElement& a) const {
    if (!validate_group_element(a)) throw Error(Errc::invalid_element, "modp: not in (Z/q)^*");
    return import_bytes(a.bytes());
  }
  mpz_class set_value(const SetElement& e) const {
    if (e.size() != set_width_) throw Error(Errc::invalid_element, "modp: wrong set element width");
    const mpz_class v = import_bytes(e.bytes());
    if (v <= 1 || v >= p_) throw Error(Errc::invalid_element, "modp: set element out of range");
    return v;
  }
  GroupElement to_group(const mpz_class& v) const { return GroupElement(export_fixed(v, group_width_)); }
  SetElement to_set(const mpz_class& v) const { return SetElement(export_fixed(v, set_width_)); }

  mpz_class p_;
  mpz_class q_;
  std::size_t set_width_;
  std::size_t group_width_;
  ActionParams params_;
};

}  // namespace

std::unique_ptr<GroupAction> make_modp_action(BackendId tag, std::string_view p_hex,
                                              std::string_view q_hex, std::string_view g_hex,
                                              std::string_view base_hex, unsigned security_level) {
  return std::make_unique<ModPAction>(tag, mpz_class(std::string(p_hex), 16),
                                      mpz_class(std::string(q_hex), 16),
                                      mpz_class(std::string(g_hex), 16),
                                      mpz_class(std::string(base_hex), 16), security_level);
}

std::unique_ptr<GroupAction> make_modp2048_action() {
  const mpz_class p(std::string(kRfc3526Prime2048), 16);
  const mpz_class q = (p - 1) / 2;
  return std::make_unique<ModPAction>(BackendId::modp2048, p, q, mpz_class(2), mpz_class(2), 112);
}

}  // namespace gaars
