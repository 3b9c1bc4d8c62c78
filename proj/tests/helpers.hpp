#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "gaars/group_action.hpp"

namespace testing {

inline const gaars::GroupAction& tiny() {
  static const auto action = gaars::make_tiny_action();
  return *action;
}

inline const gaars::GroupAction& ristretto() {
  static const auto action = gaars::make_ristretto255_action();
  return *action;
}

inline const gaars::GroupAction& modp2048() {
  static const auto action = gaars::make_modp2048_action();
  return *action;
}

inline gaars::GroupElement g(int v) {
  const std::uint8_t b = static_cast<std::uint8_t>(v);
  return gaars::GroupElement(std::span(&b, 1));
}

inline gaars::SetElement e(int v) {
  const std::uint8_t b = static_cast<std::uint8_t>(v);
  return gaars::SetElement(std::span(&b, 1));
}

inline std::vector<gaars::SetElement> ring_of(std::initializer_list<int> vs) {
  std::vector<gaars::SetElement> out;
  for (int v : vs) out.push_back(e(v));
  return out;
}

inline std::vector<std::uint8_t> bytes_of(std::string_view s) { return {s.begin(), s.end()}; }

inline int value(const gaars::SetElement& x) { return x.bytes()[0]; }
inline int value(const gaars::GroupElement& x) { return x.bytes()[0]; }

}  // namespace testing

#define CHECK_ERRC(expr, errc)                            \
  do {                                                    \
    try {                                                 \
      (void)(expr);                                       \
      FAIL_CHECK("expected an error from " #expr);        \
    } catch (const gaars::Error& err_) {                  \
      CHECK(err_.code() == (errc));                       \
    }                                                     \
  } while (false)
