#ifndef MAPENUM_ERRORS_HPP
#define MAPENUM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mapenum {

/// Every failure raised by the engine carries a stable kind tag, so the CLI
/// can name the invariant that broke and tests can match on it.
enum class ErrorKind {
    SimplePole,
    NegativeTPower,
    PartialFraction,
    MissingGenus,
    NonIntegerCoefficient,
    DegreeBoundViolation,
    Indivisibility,
    InvariantViolation,
    NonIntegerCount,
    NegativeCount,
    InexactDivision,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

class EngineError : public std::runtime_error {
public:
    EngineError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace mapenum

#endif // MAPENUM_ERRORS_HPP
