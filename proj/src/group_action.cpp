#include "gaars/group_action.hpp"

#include <stdexcept>

namespace gaars {

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) throw Error(Errc::malformed_encoding, "odd-length hex string");
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = nibble(hex[2 * i]);
    const int lo = nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw Error(Errc::malformed_encoding, "invalid hex digit");
    out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return out;
}

std::string_view backend_name(BackendId id) noexcept {
  switch (id) {
    case BackendId::tiny: return "tiny";
    case BackendId::modp2048: return "modp2048";
    case BackendId::ristretto255: return "ristretto255";
  }
  return "unknown";
}

std::vector<GroupElement> GroupAction::group_elements() const {
  throw Error(Errc::backend_unsupported, std::string(backend_name(id())) + " is not enumerable");
}

std::vector<SetElement> GroupAction::set_elements() const {
  throw Error(Errc::backend_unsupported, std::string(backend_name(id())) + " is not enumerable");
}

GroupElement GroupAction::solve_action_brute(const SetElement& e1, const SetElement& e2) const {
  if (!enumerable()) {
    throw Error(Errc::backend_unsupported, "brute-force solving needs an enumerable backend");
  }
  if (!validate_set_element(e1) || !validate_set_element(e2)) {
    throw Error(Errc::invalid_element, "solve_action_brute: not a set element");
  }
  for (const auto& a : group_elements()) {
    if (act(a, e1) == e2) return a;
  }
  // Unreachable for a transitive action.
  throw Error(Errc::invalid_element, "no group element maps e1 to e2");
}

GroupElement GroupAction::compose(std::initializer_list<GroupElement> parts) const {
  GroupElement acc = identity();
  for (const auto& p : parts) acc = compose(acc, p);
  return acc;
}

GroupElement GroupAction::decode_group(std::span<const std::uint8_t> bytes) const {
  if (bytes.size() != group_element_size()) {
    throw Error(Errc::invalid_element, "group element has wrong width");
  }
  GroupElement a(bytes);
  if (!validate_group_element(a)) throw Error(Errc::invalid_element, "not a group element");
  return a;
}

SetElement GroupAction::decode_set(std::span<const std::uint8_t> bytes) const {
  if (bytes.size() != set_element_size()) {
    throw Error(Errc::invalid_element, "set element has wrong width");
  }
  SetElement e(bytes);
  if (!validate_set_element(e)) throw Error(Errc::invalid_element, "not a set element");
  return e;
}

std::vector<std::uint8_t> sample_nonzero_below(std::span<const std::uint8_t> order, Rng& rng) {
  std::size_t lead = 0;
  while (lead < order.size() && order[lead] == 0) ++lead;
  if (lead == order.size()) throw std::invalid_argument("sample_nonzero_below: zero order");
  std::uint8_t top_mask = 0xff;
  while ((top_mask >> 1) >= order[lead]) top_mask >>= 1;

  std::vector<std::uint8_t> out(order.size(), 0);
  const std::span<std::uint8_t> body(out.data() + lead, out.size() - lead);
  for (;;) {
    rng.fill(body);
    body[0] &= top_mask;
    const bool zero = std::all_of(body.begin(), body.end(), [](auto b) { return b == 0; });
    if (zero) continue;
    if (std::lexicographical_compare(out.begin(), out.end(), order.begin(), order.end())) {
      return out;
    }
  }
}

std::unique_ptr<GroupAction> make_action(BackendId id) {
  switch (id) {
    case BackendId::tiny: return make_tiny_action();
    case BackendId::modp2048: return make_modp2048_action();
    case BackendId::ristretto255: return make_ristretto255_action();
  }
  throw Error(Errc::backend_unsupported, "unknown backend id");
}

}  // namespace gaars
