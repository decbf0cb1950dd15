#pragma once

#include <stdexcept>
#include <string>

namespace ccorder {

/// Root of the library error hierarchy. Everything thrown on purpose derives
/// from this, so callers can separate our failures from std:: ones.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Caller passed something out of contract: bad ranks, bad probabilities,
/// malformed configuration. Maps to process exit code 2 in the CLI.
class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& msg) : Error(msg) {}
};

/// A numerical computation failed in a way that cannot be recovered locally.
/// Maps to process exit code 3 in the CLI.
class ComputationError : public Error {
public:
    explicit ComputationError(const std::string& msg) : Error(msg) {}
};

/// A sample covariance matrix was too close to singular to invert
/// (condition number beyond 1e12). Message names the offending channel.
class SingularCovarianceError : public ComputationError {
public:
    explicit SingularCovarianceError(const std::string& msg) : ComputationError(msg) {}
};

/// A test statistic could not be formed from the given spectrum, e.g. a
/// 1/k̂² term with k̂ = 0.
class DegenerateStatisticError : public ComputationError {
public:
    explicit DegenerateStatisticError(const std::string& msg) : ComputationError(msg) {}
};

/// The sample count is too small for the requested statistic (nonpositive
/// Bartlett correction factor).
class SampleSizeError : public ComputationError {
public:
    explicit SampleSizeError(const std::string& msg) : ComputationError(msg) {}
};

} // namespace ccorder
