#pragma once

#include <stdexcept>
#include <string>

namespace entb {

// Base class for all library errors so callers can catch entb::Error.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DegreeOutOfRange : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class InvalidTag : public Error {
public:
    using Error::Error;
};

class InvalidDistribution : public Error {
public:
    using Error::Error;
};

class InfeasibleIndex : public Error {
public:
    using Error::Error;
};

class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class UnknownDesign : public Error {
public:
    using Error::Error;
};

class InsufficientMoments : public Error {
public:
    using Error::Error;
};

// A numerical self-check (sandwich assertion, suite check, ...) failed.
class CheckFailure : public Error {
public:
    using Error::Error;
};

}  // namespace entb
