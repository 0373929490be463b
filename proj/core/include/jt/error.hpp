#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jt {

enum class ErrorKind {
    EmptyBody,
    LogicalHead,
    NotDefined,
    ComplementTooLarge,
    SyntaxError,
    EmptyDomain,
    OpenAsHead,
    StartUnmapped,
    NotLocallyComplete,
    SearchSpaceTooLarge,
    DefectDetected,
    NotSupported,
    TooManyOpens,
    NotOpen,
    UnknownFact,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported through this type;
/// `kind()` is what callers dispatch on, `what()` carries the offending input.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail);

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace jt
