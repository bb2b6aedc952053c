#pragma once

#include <stdexcept>
#include <string>

namespace umthresh {

/// Error codes covering every failure mode the library reports. CLI tools
/// map these onto process exit codes (data errors -> 2, resource caps -> 3).
enum class Errc {
    // image-io
    MalformedHeader,
    MaxvalOutOfRange,
    TruncatedData,
    IoFailure,
    // histogram
    EvenWindow,
    NoPeaks,
    // qcircuit
    WidthMismatch,
    EmptyMeasureSet,
    UnknownGateKind,
    WidthCapExceeded,
    // povm
    EmptyBasis,
    BasisMismatch,
    // stateprep
    BadLength,
    NotNormalized,
    // thresholding
    EmptyOverlap,
    // neqr
    NotPowerOfTwoSquare,
    OutOfRange,
    MissingPosition,
    ConflictingAncilla,
    // metrics
    DimensionMismatch,
    WindowTooLarge,
    // baselines
    DegenerateHistogram,
    TooFewLevels,
    // generic
    InvalidArgument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message);
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& message);

} // namespace umthresh
