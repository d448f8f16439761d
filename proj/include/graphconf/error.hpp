#pragma once

#include <stdexcept>
#include <string>

namespace graphconf {

// Base for everything the library throws on bad input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (unknown id, n = 0, malformed morphism, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A structured-text input could not be parsed or failed validation.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace graphconf
