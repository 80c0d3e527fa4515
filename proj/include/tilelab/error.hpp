#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tilelab {

enum class ErrorKind {
    NotExpanding,
    NotDiskLike,
    DegenerateDeterminant,
    DigitOutOfRange,
    SingularPeriod,
    BoxExhausted,
    UnknownVertex,
    InvalidPath,
    NotANumberSystem,
    NonTermination,
    NotANeighbor,
    NegativeEntry,
    DepthTooLarge,
    EmptyCloud,
    IoError,
    Overflow,
    InvalidArgument,
    Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// All library failures are reported through this exception; `kind()` is the
/// stable, machine-checkable part.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// True for errors caused by the caller's input (bad parameters, out of scope),
/// as opposed to internal contract violations.
bool is_input_error(ErrorKind kind) noexcept;

} // namespace tilelab
