#pragma once

#include <stdexcept>
#include <string>

namespace shifted {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A parts sequence that is not strictly decreasing (or has a non-positive part).
class NotStrict : public Error {
 public:
  using Error::Error;
};

// Inner partition does not fit inside the outer one.
class NotContained : public Error {
 public:
  using Error::Error;
};

// A word that was required to be canonical is not.
class NotCanonical : public Error {
 public:
  using Error::Error;
};

// A filling that violates semistandardness or canonical form.
class InvalidTableau : public Error {
 public:
  using Error::Error;
};

// An operator produced a non-semistandard tableau. Indicates a bug.
class BrokenSemistandard : public Error {
 public:
  using Error::Error;
};

class InvalidIndex : public Error {
 public:
  using Error::Error;
};

// An {i,i'}-component that is neither a separated nor a collapsed string.
class NotAString : public Error {
 public:
  using Error::Error;
};

class NotUnique : public Error {
 public:
  using Error::Error;
};

class NotStrictWeight : public Error {
 public:
  using Error::Error;
};

class MissingArrow : public Error {
 public:
  using Error::Error;
};

class MalformedGraph : public Error {
 public:
  using Error::Error;
};

}  // namespace shifted
