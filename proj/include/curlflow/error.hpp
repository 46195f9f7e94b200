#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curlflow {

enum class ErrorKind {
    PoleAtPoint,
    LogOfNonPositive,
    DegreeOverflow,
    DegreeUnderflow,
    LaurentNotSupported,
    NotClosed,
    NonInvertibleMultiplier,
    BoundTooLarge,
    PoleEncountered,
    NonFiniteState,
    MissingSection,
    BothFieldAndPotential,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Failure of a toolkit operation whose precondition or domain was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace curlflow
