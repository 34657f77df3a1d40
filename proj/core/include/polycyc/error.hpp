// This file declares the exception types thrown by the polycyc library.

#ifndef POLYCYC_ERROR_HPP_
#define POLYCYC_ERROR_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace polycyc {

  //! Reasons an operation can refuse its arguments.
  enum class ErrorCode {
    not_a_prefix,
    not_a_suffix,
    not_idempotent,
    zero_has_full_up_set,
    zero_argument,
    zero_in_target,
    empty_period,
    equal_arguments,
    parse_error,
    invalid_argument
  };

  //! Returns the name of an error code, e.g. "NotAPrefix".
  char const* error_name(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what);

    [[nodiscard]] ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  //! Thrown by the text parsers; \ref offset is the byte offset of the first
  //! character that could not be consumed.
  class ParseError : public Error {
   public:
    ParseError(std::size_t offset, std::string const& what);

    [[nodiscard]] std::size_t offset() const noexcept {
      return _offset;
    }

   private:
    std::size_t _offset;
  };

}  // namespace polycyc

#endif  // POLYCYC_ERROR_HPP_
