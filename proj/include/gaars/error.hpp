#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gaars {

enum class Errc {
  invalid_element,
  backend_unsupported,
  witness_not_in_ring,
  duplicate_statement,
  invalid_challenge,
  length_mismatch,
  statement_not_in_ring,
  no_matching_session,
  oracle_collision,
  protocol_violation,
  fork_budget_exhausted,
  no_good_session,
  malformed_encoding,
  io_error,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gaars
