#pragma once

#include <stdexcept>
#include <string>

namespace arches {

enum class ErrorKind {
    DivisionByZero,
    Parse,
    MissingVariable,
    UnknownVariable,
    DuplicateNode,
    InconsistentGrid,
    InvalidSpec,
    NoLittleArch,
    SingularWeight,
    DegenerateKernel,
    Normalization,
    CoincidentParameters,
    PoleCollision,
    Precondition,
    SizeLimit,
    MalformedGrid,
    UnknownSuite,
    InconsistentSize,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::MissingVariable: return "missing-variable";
    case ErrorKind::UnknownVariable: return "unknown-variable";
    case ErrorKind::DuplicateNode: return "duplicate-node";
    case ErrorKind::InconsistentGrid: return "inconsistent-grid";
    case ErrorKind::InvalidSpec: return "invalid-spec";
    case ErrorKind::NoLittleArch: return "no-little-arch";
    case ErrorKind::SingularWeight: return "singular-weight";
    case ErrorKind::DegenerateKernel: return "degenerate-kernel";
    case ErrorKind::Normalization: return "normalization";
    case ErrorKind::CoincidentParameters: return "coincident-parameters";
    case ErrorKind::PoleCollision: return "pole-collision";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::SizeLimit: return "size-limit";
    case ErrorKind::MalformedGrid: return "malformed-grid";
    case ErrorKind::UnknownSuite: return "unknown-suite";
    case ErrorKind::InconsistentSize: return "inconsistent-size";
    }
    return "unknown";
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

} // namespace arches
