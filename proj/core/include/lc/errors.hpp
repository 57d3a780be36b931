#pragma once

/**
 * @file errors.hpp
 * @brief Typed error hierarchy. Every failure mode a caller may want to
 *        branch on gets its own exception type.
 */

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mismatched jet degree/center, bad substitution, off-surface input, ...
struct StructuralError : Error {
    using Error::Error;
};

struct DivisionByNearZero : Error {
    using Error::Error;
};

struct SqrtDomain : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& msg, std::size_t at)
        : Error(msg + " (at offset " + std::to_string(at) + ")"), offset(at) {}
};

struct UnknownFunction : SyntaxError {
    using SyntaxError::SyntaxError;
};

struct UnboundParameter : Error {
    using Error::Error;
};

struct IntegrabilityViolation : Error {
    double residual;
    IntegrabilityViolation(const std::string& msg, double res)
        : Error(msg + " (max residual " + std::to_string(res) + ")"), residual(res) {}
};

struct DiscriminantNonPositive : Error {
    using Error::Error;
};

struct DiscriminantNegative : Error {
    using Error::Error;
};

struct UmbilicPoint : Error {
    using Error::Error;
};

struct FocalAtInfinity : Error {
    using Error::Error;
};

struct ZeroDirection : Error {
    using Error::Error;
};

struct OffSurface : Error {
    using Error::Error;
};

struct GradientTooSmall : Error {
    using Error::Error;
};

struct StepFailure : Error {
    using Error::Error;
};

struct NotNormalized : Error {
    using Error::Error;
};

struct DegenerateData : Error {
    using Error::Error;
};

struct NonPolynomial : Error {
    using Error::Error;
};

struct NoPolynomialSolution : Error {
    using Error::Error;
};

struct QVanishes : Error {
    using Error::Error;
};

struct CorankTwo : Error {
    using Error::Error;
};

struct ConfigError : Error {
    int line;
    ConfigError(const std::string& msg, int line_no)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

} // namespace lc
