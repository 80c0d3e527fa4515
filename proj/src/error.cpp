#include "tilelab/error.hpp"

namespace tilelab {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::NotExpanding: return "NotExpanding";
    case ErrorKind::NotDiskLike: return "NotDiskLike";
    case ErrorKind::DegenerateDeterminant: return "DegenerateDeterminant";
    case ErrorKind::DigitOutOfRange: return "DigitOutOfRange";
    case ErrorKind::SingularPeriod: return "SingularPeriod";
    case ErrorKind::BoxExhausted: return "BoxExhausted";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::InvalidPath: return "InvalidPath";
    case ErrorKind::NotANumberSystem: return "NotANumberSystem";
    case ErrorKind::NonTermination: return "NonTermination";
    case ErrorKind::NotANeighbor: return "NotANeighbor";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::DepthTooLarge: return "DepthTooLarge";
    case ErrorKind::EmptyCloud: return "EmptyCloud";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

bool is_input_error(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::NotExpanding:
    case ErrorKind::NotDiskLike:
    case ErrorKind::DegenerateDeterminant:
    case ErrorKind::DigitOutOfRange:
    case ErrorKind::UnknownVertex:
    case ErrorKind::InvalidPath:
    case ErrorKind::NotANumberSystem:
    case ErrorKind::NotANeighbor:
    case ErrorKind::NegativeEntry:
    case ErrorKind::DepthTooLarge:
    case ErrorKind::EmptyCloud:
    case ErrorKind::InvalidArgument:
        return true;
    default:
        return false;
    }
}

} // namespace tilelab
