#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bhr {

// Every library error derives from Error so callers can catch the family.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed list, path, catalog or record text. `position` is a 0-based
// character offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class InvalidList : public Error {
  using Error::Error;
};

class InvalidPath : public Error {
  using Error::Error;
};

class InvalidEdge : public Error {
  using Error::Error;
};

class OrderMismatch : public Error {
  using Error::Error;
};

class InvalidDivisor : public Error {
  using Error::Error;
};

class InvalidLength : public Error {
  using Error::Error;
};

// A family template expands to something that is not a valid realization of
// its claimed list.
class TemplateDefect : public Error {
  using Error::Error;
};

class OutOfRange : public Error {
  using Error::Error;
};

class CompositionError : public Error {
  using Error::Error;
};

class CapExceeded : public Error {
  using Error::Error;
};

}  // namespace bhr
