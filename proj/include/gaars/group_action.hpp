#pragma once

// Hard homogeneous space abstraction: an abelian group G acting freely and
// transitively on a set E. Protocol code only ever talks to `GroupAction`;
// the concrete backends are created by the factories at the end of this file.
//
// Security contract of a backend: computing the action must be easy while
// recovering `a` from (E, a.E) (the group action inverse problem) and
// distinguishing (E, aE, bE, abE) from (E, aE, bE, cE) must be hard. The
// tiny backend deliberately violates both so tests can enumerate it.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gaars/error.hpp"
#include "gaars/rng.hpp"

namespace gaars {

inline constexpr std::size_t kMaxElementBytes = 256;

/// Canonical fixed-width encoding of a group or set element, stored inline.
/// The tag keeps group elements and set elements from being mixed up.
template <class Tag>
class Element {
 public:
  Element() = default;
  explicit Element(std::span<const std::uint8_t> bytes) {
    if (bytes.size() > kMaxElementBytes) {
      throw Error(Errc::invalid_element, "encoding longer than any supported backend");
    }
    size_ = static_cast<std::uint16_t>(bytes.size());
    std::copy(bytes.begin(), bytes.end(), data_.begin());
  }

  std::span<const std::uint8_t> bytes() const noexcept { return {data_.data(), size_}; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  friend bool operator==(const Element& a, const Element& b) noexcept {
    return a.size_ == b.size_ && std::memcmp(a.data_.data(), b.data_.data(), a.size_) == 0;
  }
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) noexcept {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    const int c = std::memcmp(a.data_.data(), b.data_.data(), a.size_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  std::array<std::uint8_t, kMaxElementBytes> data_{};
  std::uint16_t size_ = 0;
};

struct GroupTag {};
struct SetTag {};

/// Element of the acting group G (secret keys, masks, responses).
using GroupElement = Element<GroupTag>;
/// Element of the acted set E (public keys, commitments).
using SetElement = Element<SetTag>;

std::string to_hex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> from_hex(std::string_view hex);

template <class Tag>
std::string to_hex(const Element<Tag>& e) {
  return to_hex(e.bytes());
}

enum class BackendId : std::uint8_t {
  tiny = 1,
  modp2048 = 2,
  ristretto255 = 3,
};

std::string_view backend_name(BackendId id) noexcept;

/// Public description of a backend. For the mod-p backends `modulus` is p,
/// `order` is q with q | p-1, and E is <g> minus the identity. For
/// ristretto255, `modulus` is the field prime 2^255-19 and `order` the prime
/// group order l.
struct ActionParams {
  BackendId backend;
  std::vector<std::uint8_t> modulus;  // big-endian
  std::vector<std::uint8_t> order;    // big-endian
  SetElement generator;
  SetElement base_point;
  unsigned security_level;  // classical bits
};

class GroupAction {
 public:
  virtual ~GroupAction() = default;

  virtual const ActionParams& params() const noexcept = 0;
  BackendId id() const noexcept { return params().backend; }

  virtual std::size_t group_element_size() const noexcept = 0;
  virtual std::size_t set_element_size() const noexcept = 0;

  virtual GroupElement identity() const = 0;
  const SetElement& base_point() const noexcept { return params().base_point; }

  /// Group law; throws InvalidElement on non-members.
  virtual GroupElement compose(const GroupElement& a, const GroupElement& b) const = 0;
  virtual GroupElement invert(const GroupElement& a) const = 0;
  /// a . E; throws InvalidElement when either argument is not a member.
  virtual SetElement act(const GroupElement& a, const SetElement& e) const = 0;
  /// Exactly uniform over G.
  virtual GroupElement sample_group(Rng& rng) const = 0;

  virtual bool validate_group_element(const GroupElement& a) const noexcept = 0;
  virtual bool validate_set_element(const SetElement& e) const noexcept = 0;

  /// True when G is small enough to list; only such backends support the
  /// enumeration helpers below.
  virtual bool enumerable() const noexcept { return false; }
  virtual std::vector<GroupElement> group_elements() const;
  virtual std::vector<SetElement> set_elements() const;
  /// The unique a with a . e1 = e2, by exhaustive search. BackendUnsupported
  /// on non-enumerable backends.
  GroupElement solve_action_brute(const SetElement& e1, const SetElement& e2) const;

  GroupElement compose(std::initializer_list<GroupElement> parts) const;
  GroupElement decode_group(std::span<const std::uint8_t> bytes) const;
  SetElement decode_set(std::span<const std::uint8_t> bytes) const;
};

std::unique_ptr<GroupAction> make_tiny_action();
std::unique_ptr<GroupAction> make_modp2048_action();
std::unique_ptr<GroupAction> make_ristretto255_action();
std::unique_ptr<GroupAction> make_action(BackendId id);

/// Exponentiation action of (Z/q)^* on <g> \ {1} in (Z/p)^* for arbitrary
/// parameters, backed by GMP. Validates q | p-1 and ord(g) = q.
std::unique_ptr<GroupAction> make_modp_action(BackendId tag, std::string_view p_hex,
                                              std::string_view q_hex, std::string_view g_hex,
                                              std::string_view base_hex, unsigned security_level);

/// Rejection-samples a big-endian integer in [1, order) from `rng`.
std::vector<std::uint8_t> sample_nonzero_below(std::span<const std::uint8_t> order, Rng& rng);

}  // namespace gaars
