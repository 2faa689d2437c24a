#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sects {

enum class ErrorCode {
    EmptyInput,
    BadToken,
    UnmatchedPair,
    InvalidArgument,
    LimitExceeded,
    InternalMismatch,
    NotAnInvolution,
    ShapeMismatch,
    ShrinkNotAllowed,
    NotABaseClan,
    RequiresPGeQ,
    UnknownElement,
    NotRectangular,
    NotARookMatrix,
    NotInDenseSect,
    NonPositiveWeight,
    WeightOutOfRange,
    IoError,
};

std::string_view error_name(ErrorCode code) noexcept;

// Every failure in the library is reported through this exception; the code is
// what the CLI serializes into its error object.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace sects
