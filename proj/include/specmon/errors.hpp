#ifndef SPECMON_ERRORS_HPP_
#define SPECMON_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specmon {

  // Base class of every error raised by the library. Callers that only care
  // about "something went wrong" catch this; the CLI maps subclasses to exit
  // codes.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input text. `line()` is 1-based, 0 when not tied to a line.
  class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t line, std::string const& what)
        : Error(line == 0 ? what
                          : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept {
      return line_;
    }

   private:
    std::size_t line_;
  };

  class UnknownGenerator : public Error {
   public:
    explicit UnknownGenerator(char c)
        : Error(std::string("unknown generator '") + c + "'"), letter_(c) {}

    char letter() const noexcept {
      return letter_;
    }

   private:
    char letter_;
  };

  class RelationTooLong : public Error {
   public:
    using Error::Error;
  };

  class EmptyRelator : public Error {
   public:
    using Error::Error;
  };

  class EmptyWordInList : public Error {
   public:
    using Error::Error;
  };

  class NotReduced : public Error {
   public:
    using Error::Error;
  };

  class AlphabetMismatch : public Error {
   public:
    using Error::Error;
  };

  // The group oracle could not give a definite answer within its budget, or
  // could not certify a fact the monoid pipeline depends on.
  class OracleInconclusive : public Error {
   public:
    using Error::Error;
  };

  class NotFinal : public Error {
   public:
    using Error::Error;
  };

  class NotInvertible : public Error {
   public:
    using Error::Error;
  };

  class NotDistinguished : public Error {
   public:
    using Error::Error;
  };

  class NotK211 : public Error {
   public:
    using Error::Error;
  };

}  // namespace specmon

#endif  // SPECMON_ERRORS_HPP_
