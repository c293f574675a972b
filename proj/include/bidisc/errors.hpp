#pragma once

#include <stdexcept>
#include <string>

namespace bidisc {

// Base of every error thrown by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

// 1 - s + s z = 0 for some atom, or z sits on a real atom location.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

class BoundarySingularity : public DomainError {
public:
    using DomainError::DomainError;
};

// Formula degenerates at the requested point (e.g. lambda1 == lambda2 in the log example).
class UseLimit : public DomainError {
public:
    using DomainError::DomainError;
};

class NoSolution : public Error {
public:
    NoSolution(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

class IllConditioned : public Error {
public:
    IllConditioned(const std::string& what, double condition)
        : Error(what), condition_(condition) {}
    double condition() const { return condition_; }

private:
    double condition_;
};

class NotAnIsometry : public Error {
public:
    NotAnIsometry(const std::string& what, double deviation)
        : Error(what), deviation_(deviation) {}
    double deviation() const { return deviation_; }

private:
    double deviation_;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// Nevanlinna data failing one of the slope-type conditions; condition is 'a', 'b' or 'c'.
class NotSlopeType : public Error {
public:
    NotSlopeType(const std::string& what, char condition)
        : Error(what), condition_(condition) {}
    char condition() const { return condition_; }

private:
    char condition_;
};

class ObstructionError : public Error {
public:
    using Error::Error;
};

class InternalInconsistency : public Error {
public:
    using Error::Error;
};

} // namespace bidisc
