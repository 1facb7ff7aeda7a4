#include "modknot/error.hpp"

namespace modknot {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotSL2: return "NotSL2";
    case Errc::InvalidWord: return "InvalidWord";
    case Errc::AllSameLetter: return "AllSameLetter";
    case Errc::Periodic: return "Periodic";
    case Errc::NotHyperbolic: return "NotHyperbolic";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::OracleBoundExceeded: return "OracleBoundExceeded";
    case Errc::NonIntegerPhi: return "NonIntegerPhi";
    case Errc::IntegerOverflow: return "IntegerOverflow";
    case Errc::DomainError: return "DomainError";
    case Errc::InsufficientTerms: return "InsufficientTerms";
    case Errc::BranchResidualTooLarge: return "BranchResidualTooLarge";
    case Errc::ResidualTooLarge: return "ResidualTooLarge";
    case Errc::RefinementOverflow: return "RefinementOverflow";
    case Errc::EmptySample: return "EmptySample";
  }
  return "Unknown";
}

}  // namespace modknot
