#include "hct/error.hpp"

namespace hct {

const char* error_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidKeyElement: return "InvalidKeyElement";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnsupportedBlockOrder: return "UnsupportedBlockOrder";
    case ErrorCode::SentinelConflict: return "SentinelConflict";
    case ErrorCode::ValueOverflow: return "ValueOverflow";
    case ErrorCode::NonZeroPadding: return "NonZeroPadding";
    case ErrorCode::LengthUnderflow: return "LengthUnderflow";
    case ErrorCode::MalformedEnvelope: return "MalformedEnvelope";
    case ErrorCode::KeyMismatch: return "KeyMismatch";
    }
    return "Unknown";
}

} // namespace hct
