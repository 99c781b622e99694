#pragma once

#include <stdexcept>
#include <string>

namespace dicube {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input data is malformed (missing face entries, shape mismatch, ...).
class StructuralError : public Error {
public:
    using Error::Error;
};

// An operation was called outside the hypotheses under which it is defined.
class ContractError : public Error {
public:
    using Error::Error;
};

// Bad argument values (index out of range, arithmetic preconditions).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Size or enumeration cap exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

// A derived structure turned out to be ill-defined.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace dicube
