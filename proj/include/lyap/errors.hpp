#pragma once

#include <stdexcept>
#include <string>

namespace lyap {

// Base class for all library failures so callers can catch one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct EvaluationDomainError : Error {
    using Error::Error;
};

struct NoBracketError : Error {
    using Error::Error;
};

struct NoConvergenceError : Error {
    using Error::Error;
};

struct F0UndefinedError : Error {
    using Error::Error;
};

struct NonPositiveF1Error : Error {
    using Error::Error;
};

struct QuadratureFailureError : Error {
    using Error::Error;
};

struct StepUnderflowError : Error {
    using Error::Error;
};

struct OutOfBoxError : Error {
    using Error::Error;
};

struct BlowupError : Error {
    double time = 0.0;
    explicit BlowupError(const std::string& msg, double t) : Error(msg), time(t) {}
};

struct ShootingBlowupError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace lyap
