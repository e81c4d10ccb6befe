#include "mapenum/errors.hpp"

namespace mapenum {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::SimplePole: return "SimplePoleError";
    case ErrorKind::NegativeTPower: return "NegativeTPower";
    case ErrorKind::PartialFraction: return "PartialFractionError";
    case ErrorKind::MissingGenus: return "MissingGenus";
    case ErrorKind::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case ErrorKind::DegreeBoundViolation: return "DegreeBoundViolation";
    case ErrorKind::Indivisibility: return "IndivisibilityError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::NonIntegerCount: return "NonIntegerCount";
    case ErrorKind::NegativeCount: return "NegativeCount";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace mapenum
