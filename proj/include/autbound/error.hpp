#pragma once

#include <stdexcept>
#include <string>

namespace autbound {

/// Base of every error raised by the library. Each subclass maps to one
/// failure mode named in the module contracts; the CLI turns them into exit
/// codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// A denominator vanishes modulo the reduction prime; retry with another prime.
class NonInvertibleDenominator : public Error {
public:
    using Error::Error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class MalformedInput : public Error {
public:
    using Error::Error;
};

class NotExceptional : public Error {
public:
    using Error::Error;
};

class PreconditionViolation : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Enumeration would exceed the configured element cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Time or memory budget exhausted (Schreier-Sims, compact closure).
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Two reduction primes disagree on a group order.
class FaithfulnessSuspect : public Error {
public:
    using Error::Error;
};

class NonFiniteOrder : public Error {
public:
    using Error::Error;
};

class RankDeficient : public Error {
public:
    using Error::Error;
};

class NoneFound : public Error {
public:
    using Error::Error;
};

class UnknownId : public Error {
public:
    using Error::Error;
};

}  // namespace autbound
