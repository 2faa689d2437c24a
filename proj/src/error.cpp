#include "sects/error.hpp"

namespace sects {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::BadToken: return "BadToken";
    case ErrorCode::UnmatchedPair: return "UnmatchedPair";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
    case ErrorCode::NotAnInvolution: return "NotAnInvolution";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ShrinkNotAllowed: return "ShrinkNotAllowed";
    case ErrorCode::NotABaseClan: return "NotABaseClan";
    case ErrorCode::RequiresPGeQ: return "RequiresPGeQ";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::NotRectangular: return "NotRectangular";
    case ErrorCode::NotARookMatrix: return "NotARookMatrix";
    case ErrorCode::NotInDenseSect: return "NotInDenseSect";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace sects
