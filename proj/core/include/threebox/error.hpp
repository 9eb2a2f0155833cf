#pragma once

#include <stdexcept>
#include <string>

namespace threebox {

// Every failure raised by the library derives from Error, so callers that
// only care about "domain failure vs. success" can catch one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class NormalizationError : public Error {
public:
    using Error::Error;
};

// A documented precondition or postcondition does not hold.
class ContractViolation : public Error {
public:
    using Error::Error;
};

// A conditional probability was requested whose conditioning event has
// probability zero.
class UndefinedConditional : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class UnknownNode : public Error {
public:
    using Error::Error;
};

}  // namespace threebox
