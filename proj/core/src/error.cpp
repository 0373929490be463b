#include "jt/error.hpp"

namespace jt {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::EmptyBody: return "EmptyBody";
    case ErrorKind::LogicalHead: return "LogicalHead";
    case ErrorKind::NotDefined: return "NotDefined";
    case ErrorKind::ComplementTooLarge: return "ComplementTooLarge";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::EmptyDomain: return "EmptyDomain";
    case ErrorKind::OpenAsHead: return "OpenAsHead";
    case ErrorKind::StartUnmapped: return "StartUnmapped";
    case ErrorKind::NotLocallyComplete: return "NotLocallyComplete";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::DefectDetected: return "DefectDetected";
    case ErrorKind::NotSupported: return "NotSupported";
    case ErrorKind::TooManyOpens: return "TooManyOpens";
    case ErrorKind::NotOpen: return "NotOpen";
    case ErrorKind::UnknownFact: return "UnknownFact";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error{std::string{to_string(kind)} + ": " + detail}, kind_{kind}
{
}

} // namespace jt
