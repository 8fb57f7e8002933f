#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace logmin {

enum class ErrorKind {
    AmbientMismatch,
    NotSharp,
    NotPointed,
    NotMember,
    NotIntegralMono,
    NilpotentsPresent,
    WrongCokernelClass,
    NotAFace,
    BoundExceeded,
    ConstructionFailure,
    AssociativityViolation,
    IdentityViolation,
    FunctorLawViolation,
    NaturalityViolation,
    UnknownObject,
    NotGroupoidFibration,
    ValidationFailure,
    ConditionsNotSatisfied,
    NotACurveDatum,
    BoundsTooTight,
    MalformedFixture,
    InvalidArgument,
};

constexpr std::string_view kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::AmbientMismatch: return "AmbientMismatch";
        case ErrorKind::NotSharp: return "NotSharp";
        case ErrorKind::NotPointed: return "NotPointed";
        case ErrorKind::NotMember: return "NotMember";
        case ErrorKind::NotIntegralMono: return "NotIntegralMono";
        case ErrorKind::NilpotentsPresent: return "NilpotentsPresent";
        case ErrorKind::WrongCokernelClass: return "WrongCokernelClass";
        case ErrorKind::NotAFace: return "NotAFace";
        case ErrorKind::BoundExceeded: return "BoundExceeded";
        case ErrorKind::ConstructionFailure: return "ConstructionFailure";
        case ErrorKind::AssociativityViolation: return "AssociativityViolation";
        case ErrorKind::IdentityViolation: return "IdentityViolation";
        case ErrorKind::FunctorLawViolation: return "FunctorLawViolation";
        case ErrorKind::NaturalityViolation: return "NaturalityViolation";
        case ErrorKind::UnknownObject: return "UnknownObject";
        case ErrorKind::NotGroupoidFibration: return "NotGroupoidFibration";
        case ErrorKind::ValidationFailure: return "ValidationFailure";
        case ErrorKind::ConditionsNotSatisfied: return "ConditionsNotSatisfied";
        case ErrorKind::NotACurveDatum: return "NotACurveDatum";
        case ErrorKind::BoundsTooTight: return "BoundsTooTight";
        case ErrorKind::MalformedFixture: return "MalformedFixture";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace logmin
