#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gq {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A coordinate, element or index outside its admissible range.
  class RangeError : public Error {
   public:
    using Error::Error;
  };

  //! Operands of incompatible arity or universe.
  class ArityError : public Error {
   public:
    using Error::Error;
  };

  //! A relation failed a structural precondition (e.g. "not reflexive").
  class ClassificationError : public Error {
   public:
    using Error::Error;
  };

  //! A configured size or budget limit would be exceeded.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  //! Malformed text input; `line()` is 1-based, 0 when not applicable.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& what)
        : Error(line == 0 ? what
                          : "line " + std::to_string(line) + ": " + what),
          _line(line) {}

    [[nodiscard]] std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

}  // namespace gq
