#include "gaars/error.hpp"

namespace gaars {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_element: return "InvalidElement";
    case Errc::backend_unsupported: return "BackendUnsupported";
    case Errc::witness_not_in_ring: return "WitnessNotInRing";
    case Errc::duplicate_statement: return "DuplicateStatement";
    case Errc::invalid_challenge: return "InvalidChallenge";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::statement_not_in_ring: return "StatementNotInRing";
    case Errc::no_matching_session: return "NoMatchingSession";
    case Errc::oracle_collision: return "OracleCollision";
    case Errc::protocol_violation: return "ProtocolViolation";
    case Errc::fork_budget_exhausted: return "ForkBudgetExhausted";
    case Errc::no_good_session: return "NoGoodSession";
    case Errc::malformed_encoding: return "MalformedEncoding";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

}  // namespace gaars
