#pragma once

#include <stdexcept>
#include <string>

namespace hypercauchy {

/// Base class for all library errors.  Each error carries the process exit
/// code the CLI maps it to: 2 = bad input, 3 = mathematical degeneracy,
/// 4 = numerical failure.
class Error : public std::runtime_error {
public:
    Error(const std::string& what, int exit_code)
        : std::runtime_error(what), exit_code_(exit_code) {}
    int exit_code() const noexcept { return exit_code_; }

private:
    int exit_code_;
};

/// Gamma function evaluated at (or too close to) a non-positive integer.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& what) : Error(what, 3) {}
};

/// Parameters fall on an excluded integer lattice (logarithmic cases are
/// out of scope) or a needed connection constant is singular.
class DegenerateParams : public Error {
public:
    explicit DegenerateParams(const std::string& what) : Error(what, 3) {}
};

/// A null-solution construction was requested for a non-degenerate gamma.
class NotDegenerate : public Error {
public:
    explicit NotDegenerate(const std::string& what) : Error(what, 3) {}
};

class NoConvergence : public Error {
public:
    explicit NoConvergence(const std::string& what) : Error(what, 4) {}
};

class StepFailure : public Error {
public:
    explicit StepFailure(const std::string& what) : Error(what, 4) {}
};

class SingularityTooClose : public Error {
public:
    explicit SingularityTooClose(const std::string& what) : Error(what, 4) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what) : Error(what, 4) {}
};

class OutsideDomain : public Error {
public:
    explicit OutsideDomain(const std::string& what) : Error(what, 4) {}
};

class PreconditionViolation : public Error {
public:
    explicit PreconditionViolation(const std::string& what) : Error(what, 2) {}
};

class BasepointInvalid : public Error {
public:
    explicit BasepointInvalid(const std::string& what) : Error(what, 2) {}
};

class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what, 2) {}
};

/// An internal cross-check (closed form vs. independent oracle) disagreed
/// beyond its tolerance.
class VerificationFailure : public Error {
public:
    explicit VerificationFailure(const std::string& what) : Error(what, 4) {}
};

} // namespace hypercauchy
