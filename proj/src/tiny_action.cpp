// Exhaustively enumerable exponentiation action: (Z/11)^* acting on the
// order-11 subgroup of (Z/23)^* minus the identity, a.E = E^a mod 23.
// Classically trivial to break; exists so tests can enumerate everything.

#include <cstdint>

#include "gaars/group_action.hpp"

namespace gaars {
namespace {

constexpr std::uint32_t kP = 23;
constexpr std::uint32_t kQ = 11;
constexpr std::uint32_t kG = 2;
constexpr std::uint32_t kBase = 2;

std::uint32_t powmod(std::uint32_t base, std::uint32_t exp, std::uint32_t mod) {
  std::uint32_t result = 1 % mod;
  base %= mod;
  while (exp != 0) {
    if (exp & 1u) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

class TinyAction final : public GroupAction {
 public:
  TinyAction() {
    const std::uint8_t p[] = {kP};
    const std::uint8_t q[] = {kQ};
    params_ = ActionParams{BackendId::tiny,          {p, p + 1}, {q, q + 1}, set(kG),
                           set(kBase),               0};
  }

  const ActionParams& params() const noexcept override { return params_; }
  std::size_t group_element_size() const noexcept override { return 1; }
  std::size_t set_element_size() const noexcept override { return 1; }

  GroupElement identity() const override { return group(1); }

  GroupElement compose(const GroupElement& a, const GroupElement& b) const override {
    return group(value(a) * value(b) % kQ);
  }

  GroupElement invert(const GroupElement& a) const override {
    return group(powmod(value(a), kQ - 2, kQ));
  }

  SetElement act(const GroupElement& a, const SetElement& e) const override {
    return set(powmod(value(e), value(a), kP));
  }

  GroupElement sample_group(Rng& rng) const override {
    return GroupElement(sample_nonzero_below(params_.order, rng));
  }

  bool validate_group_element(const GroupElement& a) const noexcept override {
    return a.size() == 1 && a.bytes()[0] >= 1 && a.bytes()[0] < kQ;
  }

  bool validate_set_element(const SetElement& e) const noexcept override {
    if (e.size() != 1) return false;
    const std::uint32_t v = e.bytes()[0];
    return v > 1 && v < kP && powmod(v, kQ, kP) == 1;
  }

  bool enumerable() const noexcept override { return true; }

  std::vector<GroupElement> group_elements() const override {
    std::vector<GroupElement> out;
    for (std::uint32_t a = 1; a < kQ; ++a) out.push_back(group(a));
    return out;
  }

  std::vector<SetElement> set_elements() const override {
    std::vector<SetElement> out;
    for (std::uint32_t e = 2; e < kP; ++e) {
      if (powmod(e, kQ, kP) == 1) out.push_back(set(e));
    }
    return out;
  }

 private:
  static GroupElement group(std::uint32_t v) {
    const std::uint8_t b = static_cast<std::uint8_t>(v);
    return GroupElement(std::span(&b, 1));
  }
  static SetElement set(std::uint32_t v) {
    const std::uint8_t b = static_cast<std::uint8_t>(v);
    return SetElement(std::span(&b, 1));
  }
  std::uint32_t value(const GroupElement& a) const {
    if (!validate_group_element(a)) throw Error(Errc::invalid_element, "tiny: not in (Z/11)^*");
    return a.bytes()[0];
  }
  std::uint32_t value(const SetElement& e) const {
    if (!validate_set_element(e)) throw Error(Errc::invalid_element, "tiny: not in <2> \\ {1}");
    return e.bytes()[0];
  }

  ActionParams params_;
};

}  // namespace

std::unique_ptr<GroupAction> make_tiny_action() { return std::make_unique<TinyAction>(); }

}  // namespace gaars
