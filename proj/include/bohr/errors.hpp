#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

// Root of every error the library throws. The CLI maps subclasses onto
// exit statuses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter lies outside the admissible range of a class or theorem.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// An argument (radius, index, tolerance) lies outside an operation's domain.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

// No index with a contracting ratio bound was found within the term cap.
class NonContracting : public Error {
 public:
  using Error::Error;
};

// A series handed to the alternating evaluator repeats a sign or has a
// non-decreasing magnitude.
class NotAlternating : public Error {
 public:
  using Error::Error;
};

// The radius function has no certified sign change on the search interval.
class NoBracket : public Error {
 public:
  using Error::Error;
};

// A theorem was paired with a class it does not apply to.
class MismatchedVariant : public Error {
 public:
  using Error::Error;
};

}  // namespace bohr
