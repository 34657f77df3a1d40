#include "polycyc/error.hpp"

namespace polycyc {

  char const* error_name(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::not_a_prefix:
        return "NotAPrefix";
      case ErrorCode::not_a_suffix:
        return "NotASuffix";
      case ErrorCode::not_idempotent:
        return "NotIdempotent";
      case ErrorCode::zero_has_full_up_set:
        return "ZeroHasFullUpSet";
      case ErrorCode::zero_argument:
        return "ZeroArgument";
      case ErrorCode::zero_in_target:
        return "ZeroInTarget";
      case ErrorCode::empty_period:
        return "EmptyPeriod";
      case ErrorCode::equal_arguments:
        return "EqualArguments";
      case ErrorCode::parse_error:
        return "ParseError";
      case ErrorCode::invalid_argument:
        return "InvalidArgument";
    }
    return "Unknown";
  }

  Error::Error(ErrorCode code, std::string const& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what),
        _code(code) {}

  ParseError::ParseError(std::size_t offset, std::string const& what)
      : Error(ErrorCode::parse_error,
              what + " at offset " + std::to_string(offset)),
        _offset(offset) {}

}  // namespace polycyc
