#pragma once

#include <stdexcept>
#include <string>

namespace primeflow {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad request: invalid argument, malformed grid, out-of-domain parameter.
// The CLI maps this to exit code 1.
class ConfigError : public Error {
public:
    using Error::Error;
};

// A configured cap (sieve limit, fast-count limit, segment cap, supported
// maximum) was exceeded. CLI exit code 2.
class LimitError : public Error {
public:
    using Error::Error;
};

// An internal consistency check failed during a run. CLI exit code 3.
class VerificationError : public Error {
public:
    using Error::Error;
};

// Math-domain violations (pole crossed, series outside its radius, li(x)
// with x < 2, invalid window). CLI exit code 1.
class DomainError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

// Requested flow time is at or past the pole t* = -1/d0.
class FlowSingularityError : public DomainError {
public:
    FlowSingularityError(const std::string& msg, double t_star)
        : DomainError(msg), t_star_(t_star) {}
    double t_star() const { return t_star_; }

private:
    double t_star_;
};

// Series evaluation requested outside |t*d0| < 1.
class SeriesRadiusError : public DomainError {
public:
    using DomainError::DomainError;
};

// The numeric integrator detected a trajectory blowing up (or a fixed step
// too coarse to resolve it).
class FlowBlowUpError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace primeflow
