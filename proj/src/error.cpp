#include "potgraphic/error.hpp"

namespace potgraphic {

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::EntryExceedsNMinus1: return "EntryExceedsNMinus1";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ResultNegative: return "ResultNegative";
    case Errc::ConstraintViolation: return "ConstraintViolation";
    case Errc::DemandExceeded: return "DemandExceeded";
    case Errc::NotPotential: return "NotPotential";
    case Errc::SideConditionUnmet: return "SideConditionUnmet";
    case Errc::WorkBoundExceeded: return "WorkBoundExceeded";
    case Errc::PreconditionUnmet: return "PreconditionUnmet";
    case Errc::InfeasibleSigma: return "InfeasibleSigma";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidGraph: return "InvalidGraph";
    }
    return "Unknown";
}

} // namespace potgraphic
