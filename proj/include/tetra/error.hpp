#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tetra {

enum class ErrorKind {
    Parse,
    NotApplicable,
    IsMinimal,
    IsTrivial,
    TrivialCurve,
    NotMinimal,
    IsACM,
    NotACM,
    NotStable,
    FNotInIdeal,
    GDividesF,
    BoundTooSmall,
    Disagreement,
    NotBorelFixed,
    EnumerationCap,
    InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::IsMinimal: return "IsMinimal";
    case ErrorKind::IsTrivial: return "IsTrivial";
    case ErrorKind::TrivialCurve: return "TrivialCurve";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::IsACM: return "IsACM";
    case ErrorKind::NotACM: return "NotACM";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::FNotInIdeal: return "FNotInIdeal";
    case ErrorKind::GDividesF: return "GDividesF";
    case ErrorKind::BoundTooSmall: return "BoundTooSmall";
    case ErrorKind::Disagreement: return "Disagreement";
    case ErrorKind::NotBorelFixed: return "NotBorelFixed";
    case ErrorKind::EnumerationCap: return "EnumerationCap";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace tetra
