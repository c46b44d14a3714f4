#pragma once

#include <stdexcept>
#include <string>

namespace floer {

// Base of everything the library throws on bad input. The CLI maps these to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SyntaxError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct FiltrationError : DomainError { using DomainError::DomainError; };
struct UnsupportedError : DomainError { using DomainError::DomainError; };
struct ResourceError : Error { using Error::Error; };

// Raised when an internal cross-check fails; indicates a bug rather than bad input.
struct ConsistencyError : Error { using Error::Error; };

}  // namespace floer
