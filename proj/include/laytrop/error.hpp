#pragma once

#include <stdexcept>
#include <string>

namespace laytrop {

enum class ErrorKind {
    Parse,
    ModeViolation,
    ModeMismatch,
    InvalidArgument,
    GhostRoot,
    RationalPowerOfGhost,
    NotBinomial,
    GhostLeading,
    EqualExponents,
    GhostConstant,
    GhostConstantRoot,
    SingleMonomial,
    NotUnivariate,
    NotTangiblySpanned,
    WrongMode,
    NotMonic,
    DegreeOrder,
    NoTangibleElement,
    NoCommonPart,
    OverlappingResiduals,
    ZeroHasNoValuation,
    NotCommonMonomial,
};

const char* to_string(ErrorKind kind);

// Domain error carrying a machine-readable kind. The message names the
// operation and the offending input.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace laytrop
