#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace selmer {

enum class ErrorCode {
    InvalidArgument,
    CapExceeded,
    SchemaError,
    InvariantViolation,
    NonInvertibleAction,
    GroupTooSmall,
    NotInvariant,
    NotEquivariant,
    NotGenerating,
    NotFiniteIndex,
    BoundViolated,
    RamifiedPrime,
    DividesM,
    MissingClassData,
    PoolExhausted,
    MissingPrime,
    SUnitLeak,
    NeedsLocalData,
    NotWellDefined,
    Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// message names the failing invariant or input.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

} // namespace selmer
