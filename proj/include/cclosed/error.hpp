#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cclosed {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A table entry lies outside [0, n), or the table shape is wrong.
  class MalformedTable : public Error {
   public:
    using Error::Error;
  };

  //! An operation was called on input that violates its precondition
  //! (non-idempotent argument, non-ideal subset, non-central idempotent, ...).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  class ArgumentError : public Error {
   public:
    using Error::Error;
  };

  class SizeLimitError : public Error {
   public:
    using Error::Error;
  };

  //! Something the mathematics guarantees did not happen. Indicates a bug.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

  //! Syntax error in a table file or descriptor expression. Line and column
  //! are 1-based.
  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": "
                + what),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

}  // namespace cclosed
