#include "curlflow/error.hpp"

namespace curlflow {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::LogOfNonPositive: return "LogOfNonPositive";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::DegreeUnderflow: return "DegreeUnderflow";
    case ErrorKind::LaurentNotSupported: return "LaurentNotSupported";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NonInvertibleMultiplier: return "NonInvertibleMultiplier";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
    case ErrorKind::PoleEncountered: return "PoleEncountered";
    case ErrorKind::NonFiniteState: return "NonFiniteState";
    case ErrorKind::MissingSection: return "MissingSection";
    case ErrorKind::BothFieldAndPotential: return "BothFieldAndPotential";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace curlflow
