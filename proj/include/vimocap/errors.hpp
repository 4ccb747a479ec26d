#pragma once

#include <stdexcept>
#include <string>

namespace vimocap {

// Base class for all library errors. Each condition gets its own type so
// callers can catch selectively; the CLI maps any Error to exit code 2.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateInput : Error {
    using Error::Error;
};
struct NotARotation : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct RankDeficient : Error {
    using Error::Error;
};
struct NonConvergence : Error {
    using Error::Error;
};
struct UnknownSensor : Error {
    using Error::Error;
};
struct BehindCamera : Error {
    using Error::Error;
};
struct SequenceTooShort : Error {
    using Error::Error;
};
struct LengthMismatch : Error {
    using Error::Error;
};
struct NumericalOverflow : Error {
    using Error::Error;
};
struct LimitViolation : Error {
    using Error::Error;
};
struct SingularNormalEquations : Error {
    using Error::Error;
};
struct Divergence : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace vimocap
