// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <stdexcept>
#include <string>

namespace pcartan {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the arguments of an operation does not hold.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The requested p-adic precision cannot be certified.
class PrecisionError : public Error {
public:
    using Error::Error;
};

/// Division by an element that is zero to the carried precision.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// The discriminant of a Weierstrass model vanishes.
class SingularCurve : public DomainError {
public:
    using DomainError::DomainError;
};

/// Two independent computations of the same quantity disagree.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace pcartan
