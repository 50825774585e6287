#pragma once

#include <stdexcept>
#include <string>

namespace mealy {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A symbol (state, letter, builtin name) is not known to the automaton.
class SymbolError : public Error {
public:
    using Error::Error;
};

/// A precondition on the arguments does not hold (non-invertible automaton,
/// mismatched alphabets, non-cyclic automaton, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The requested object would exceed a configured memory or time cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Malformed automaton text or word syntax.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A bounded search gave up without finding what it looked for.
class NotFoundError : public Error {
public:
    using Error::Error;
};

} // namespace mealy
