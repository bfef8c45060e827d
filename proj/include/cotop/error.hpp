#pragma once

#include <stdexcept>
#include <string>

namespace cotop {

/// Failure categories surfaced by the library. The CLI maps them to exit codes.
enum class ErrorKind {
    AmbientMismatch,
    InvalidField,
    InvalidCoalgebra,
    InvalidBicomodule,
    InvalidMorphism,
    CoalgebraMismatch,
    NotSubbicomodule,
    NotFullyInvariant,
    ZeroSubmodule,
    UnknownPoint,
    BudgetExceeded,
    ExhaustiveUnavailableOverQ,
    UnsupportedOverQ,
    Parse,
    Usage,
};

inline const char* to_string(ErrorKind k)
{
    switch (k) {
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::InvalidCoalgebra: return "InvalidCoalgebra";
    case ErrorKind::InvalidBicomodule: return "InvalidBicomodule";
    case ErrorKind::InvalidMorphism: return "InvalidMorphism";
    case ErrorKind::CoalgebraMismatch: return "CoalgebraMismatch";
    case ErrorKind::NotSubbicomodule: return "NotSubbicomodule";
    case ErrorKind::NotFullyInvariant: return "NotFullyInvariant";
    case ErrorKind::ZeroSubmodule: return "ZeroSubmodule";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ExhaustiveUnavailableOverQ: return "ExhaustiveUnavailableOverQ";
    case ErrorKind::UnsupportedOverQ: return "UnsupportedOverQ";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Usage: return "UsageError";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what)
        , kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace cotop
