#include "selmer/errors.hpp"

#include <fmt/format.h>

namespace selmer {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::NonInvertibleAction: return "NonInvertibleAction";
    case ErrorCode::GroupTooSmall: return "GroupTooSmall";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotEquivariant: return "NotEquivariant";
    case ErrorCode::NotGenerating: return "NotGenerating";
    case ErrorCode::NotFiniteIndex: return "NotFiniteIndex";
    case ErrorCode::BoundViolated: return "BoundViolated";
    case ErrorCode::RamifiedPrime: return "RamifiedPrime";
    case ErrorCode::DividesM: return "DividesM";
    case ErrorCode::MissingClassData: return "MissingClassData";
    case ErrorCode::PoolExhausted: return "PoolExhausted";
    case ErrorCode::MissingPrime: return "MissingPrime";
    case ErrorCode::SUnitLeak: return "SUnitLeak";
    case ErrorCode::NeedsLocalData: return "NeedsLocalData";
    case ErrorCode::NotWellDefined: return "NotWellDefined";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(fmt::format("{}: {}", to_string(code), detail))
    , code_(code)
    , detail_(detail)
{
}

void fail(ErrorCode code, const std::string& detail)
{
    throw Error(code, detail);
}

} // namespace selmer
