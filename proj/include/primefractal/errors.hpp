// errors.hpp - exception types shared across the library.
#pragma once

#include <stdexcept>

namespace primefractal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter or argument outside its documented domain.
struct InvalidParams : Error {
  using Error::Error;
};

// A level-set operation would materialize more intervals than allowed.
struct BudgetExceeded : Error {
  using Error::Error;
};

// An explicit symbol list ran out before the requested level.
struct SourceExhausted : Error {
  using Error::Error;
};

// The prime stream would have to sieve past its configured magnitude cap.
struct SieveCapExceeded : Error {
  using Error::Error;
};

// A numerator or digit path that is not part of the level set.
struct NotAMember : Error {
  using Error::Error;
};

// Malformed textual input: rationals, digit strings, JSON documents.
struct MalformedInput : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace primefractal
