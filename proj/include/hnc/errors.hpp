#pragma once

#include <stdexcept>
#include <string>

namespace hnc {

// Domain error codes. The CLI maps every one of these to exit status 1 and a
// machine-readable "code" field; usage errors are handled separately.
enum class ErrorCode {
    DimensionMismatch,
    ZeroVector,
    NotAmple,
    NotNef,
    RankUnsupported,
    MissingGenerators,
    AmbiguousWall,
    NoDestabilizer,
    UnknownAutomorphism,
    EmptyInterval,
    ChamberNotConstant,
    MissingInput,
    NotFound,
    InvalidGenus,
    ParseError,
    ValidationError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotAmple: return "NotAmple";
    case ErrorCode::NotNef: return "NotNef";
    case ErrorCode::RankUnsupported: return "RankUnsupported";
    case ErrorCode::MissingGenerators: return "MissingGenerators";
    case ErrorCode::AmbiguousWall: return "AmbiguousWall";
    case ErrorCode::NoDestabilizer: return "NoDestabilizer";
    case ErrorCode::UnknownAutomorphism: return "UnknownAutomorphism";
    case ErrorCode::EmptyInterval: return "EmptyInterval";
    case ErrorCode::ChamberNotConstant: return "ChamberNotConstant";
    case ErrorCode::MissingInput: return "MissingInput";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::InvalidGenus: return "InvalidGenus";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

} // namespace hnc
