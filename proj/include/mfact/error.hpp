#ifndef MFACT_ERROR_HPP
#define MFACT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mfact {

enum class ErrorKind {
    ContextMismatch,
    DimensionMismatch,
    RankMismatch,
    NotDivisible,
    ZeroF,
    NotLocal,
    AxiomFailed,
    FMismatch,
    ComposabilityMismatch,
    SignatureMismatch,
    StepBudgetExceeded,
    PdTooLarge,
    NotGraded,
    IsoCheckFailed,
    RegularityFailed,
    NotFiniteLength,
    VerificationFailed,
    ParseError,
    UndefinedName,
    DuplicateName,
    InvalidArgument,
};

inline const char* error_kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::ZeroF: return "ZeroF";
    case ErrorKind::NotLocal: return "NotLocal";
    case ErrorKind::AxiomFailed: return "AxiomFailed";
    case ErrorKind::FMismatch: return "FMismatch";
    case ErrorKind::ComposabilityMismatch: return "ComposabilityMismatch";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::StepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorKind::PdTooLarge: return "PdTooLarge";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::IsoCheckFailed: return "IsoCheckFailed";
    case ErrorKind::RegularityFailed: return "RegularityFailed";
    case ErrorKind::NotFiniteLength: return "NotFiniteLength";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UndefinedName: return "UndefinedName";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what)
{
    throw Error(kind, what);
}

} // namespace mfact

#endif
