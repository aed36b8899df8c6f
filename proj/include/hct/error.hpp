#pragma once

#include <stdexcept>
#include <string>

namespace hct {

enum class ErrorCode {
    InvalidArgument = 1,
    InvalidKeyElement,
    NoInverse,
    DimensionMismatch,
    UnsupportedBlockOrder,
    SentinelConflict,
    ValueOverflow,
    NonZeroPadding,
    LengthUnderflow,
    MalformedEnvelope,
    KeyMismatch,
};

const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace hct
