#pragma once

#include <stdexcept>
#include <string>

namespace symdiff {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

// Malformed textual input ("p/q" strings, config files).
class ParseError : public Error {
public:
    using Error::Error;
};

// A precondition on the arguments does not hold (range, parity, admissibility).
class DomainError : public Error {
public:
    using Error::Error;
};

// Raised when an exact computation produces something that is mathematically
// impossible (a failed Bezout identity, an irrational group average). Always a bug.
class ArithmeticFault : public Error {
public:
    using Error::Error;
};

} // namespace symdiff
