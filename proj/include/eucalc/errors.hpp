#ifndef EUCALC_ERRORS_HPP
#define EUCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eucalc {

// Every failure mode has a stable code so the CLI and the tests can match on
// it without parsing message text.
enum class Err {
    CycleInOrder,
    FrontierViolation,
    DuplicateCellId,
    UnknownCell,
    NotMonotone,
    NegativeFiberDim,
    ModeMismatch,
    SmoothFlagRejected,
    SmoothFlagRequired,
    SmoothRequired,
    SpaceMismatch,
    TargetMismatch,
    ChainMismatch,
    UnsupportedFragment,
    NotUnitriangular,
    ModeUnsupported,
    NotInvertible,
    BoundExceeded,
    SchemaError,
    VersionError,
    UsageError,
};

const char* err_name(Err code);

class Error : public std::runtime_error {
public:
    Error(Err code, std::string message)
        : std::runtime_error(std::string(err_name(code)) + ": " + message), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

// Schema problems carry the JSON path of the offending node.
class SchemaError : public Error {
public:
    SchemaError(std::string path, std::string message)
        : Error(Err::SchemaError, path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

inline const char* err_name(Err code) {
    switch (code) {
        case Err::CycleInOrder: return "CycleInOrder";
        case Err::FrontierViolation: return "FrontierViolation";
        case Err::DuplicateCellId: return "DuplicateCellId";
        case Err::UnknownCell: return "UnknownCell";
        case Err::NotMonotone: return "NotMonotone";
        case Err::NegativeFiberDim: return "NegativeFiberDim";
        case Err::ModeMismatch: return "ModeMismatch";
        case Err::SmoothFlagRejected: return "SmoothFlagRejected";
        case Err::SmoothFlagRequired: return "SmoothFlagRequired";
        case Err::SmoothRequired: return "SmoothRequired";
        case Err::SpaceMismatch: return "SpaceMismatch";
        case Err::TargetMismatch: return "TargetMismatch";
        case Err::ChainMismatch: return "ChainMismatch";
        case Err::UnsupportedFragment: return "UnsupportedFragment";
        case Err::NotUnitriangular: return "NotUnitriangular";
        case Err::ModeUnsupported: return "ModeUnsupported";
        case Err::NotInvertible: return "NotInvertible";
        case Err::BoundExceeded: return "BoundExceeded";
        case Err::SchemaError: return "SchemaError";
        case Err::VersionError: return "VersionError";
        case Err::UsageError: return "UsageError";
    }
    return "UnknownError";
}

}  // namespace eucalc

#endif
