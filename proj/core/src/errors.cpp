#include <umthresh/errors.hpp>

namespace umthresh {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::MaxvalOutOfRange: return "MaxvalOutOfRange";
    case Errc::TruncatedData: return "TruncatedData";
    case Errc::IoFailure: return "IoFailure";
    case Errc::EvenWindow: return "EvenWindow";
    case Errc::NoPeaks: return "NoPeaks";
    case Errc::WidthMismatch: return "WidthMismatch";
    case Errc::EmptyMeasureSet: return "EmptyMeasureSet";
    case Errc::UnknownGateKind: return "UnknownGateKind";
    case Errc::WidthCapExceeded: return "WidthCapExceeded";
    case Errc::EmptyBasis: return "EmptyBasis";
    case Errc::BasisMismatch: return "BasisMismatch";
    case Errc::BadLength: return "BadLength";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::EmptyOverlap: return "EmptyOverlap";
    case Errc::NotPowerOfTwoSquare: return "NotPowerOfTwoSquare";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::MissingPosition: return "MissingPosition";
    case Errc::ConflictingAncilla: return "ConflictingAncilla";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::WindowTooLarge: return "WindowTooLarge";
    case Errc::DegenerateHistogram: return "DegenerateHistogram";
    case Errc::TooFewLevels: return "TooFewLevels";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace umthresh
