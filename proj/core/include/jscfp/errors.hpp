#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jscfp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An extended-real operation has no defined value (inf - inf, 0 * inf).
class IndeterminateForm : public Error {
public:
    using Error::Error;
};

/// A point lies outside the domain declared by its space.
class DomainViolation : public Error {
public:
    using Error::Error;
};

class BadParams : public Error {
public:
    using Error::Error;
};

/// A sequence handed to a D3 check does not converge to its stated limit.
class NotConvergent : public Error {
public:
    NotConvergent(std::string what, std::size_t trial)
        : Error(std::move(what)), trial_(trial) {}

    std::size_t trial() const noexcept { return trial_; }

private:
    std::size_t trial_;
};

/// Operator evaluation failed while building step `step` of an iteration.
class EvaluationError : public Error {
public:
    EvaluationError(const std::string& what, std::size_t step)
        : Error("evaluation failed at step " + std::to_string(step) + ": " + what),
          step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

/// The brute-force oracle disagrees with the solver or a probe.
class OracleMismatch : public Error {
public:
    using Error::Error;
};

} // namespace jscfp
