#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arrcoh {

enum class ErrorKind {
    ParseError,
    NotReduced,
    DivisionByZero,
    OrderMismatch,
    IndexOutOfRange,
    SizeMismatch,
    TrivialAssignment,
    NotInScope,
    ParallelPair,
    BasisDependent,
    NotInSpan,
    GenericityExhausted,
    EqualClasses,
    RepresentativeDependent,
    InvalidArgument,
};

inline std::string_view to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::TrivialAssignment: return "TrivialAssignment";
    case ErrorKind::NotInScope: return "NotInScope";
    case ErrorKind::ParallelPair: return "ParallelPair";
    case ErrorKind::BasisDependent: return "BasisDependent";
    case ErrorKind::NotInSpan: return "NotInSpan";
    case ErrorKind::GenericityExhausted: return "GenericityExhausted";
    case ErrorKind::EqualClasses: return "EqualClasses";
    case ErrorKind::RepresentativeDependent: return "RepresentativeDependent";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library. The message names the offending
/// index, point or literal.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace arrcoh
