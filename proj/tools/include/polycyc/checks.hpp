// This file contains the property suites run by `polycyc check`. Each suite
// exhaustively checks the algebraic laws of one module over a bounded
// universe of elements.

#ifndef POLYCYC_CHECKS_HPP_
#define POLYCYC_CHECKS_HPP_

#include <chrono>    // for duration
#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

namespace polycyc {

  struct PropertyResult {
    std::string name;
    std::size_t cases    = 0;
    std::size_t failures = 0;
    //! The first failing case in enumeration order.
    std::optional<std::string> counterexample;
  };

  struct CheckReport {
    std::string                         suite;
    std::vector<PropertyResult>         properties;
    std::chrono::duration<double>       wall_time{0};

    [[nodiscard]] std::size_t cases() const noexcept;
    [[nodiscard]] std::size_t failures() const noexcept;

    [[nodiscard]] bool ok() const noexcept {
      return failures() == 0;
    }
  };

  struct CheckOptions {
    //! Bound on the component lengths of the universe U(alphabet, max_len).
    std::size_t max_len = 2;
    //! Must be at least 2.
    std::size_t alphabet = 2;
    std::uint64_t seed   = 20161015;
  };

  //! The suite names accepted by run_checks, excluding "all".
  [[nodiscard]] std::vector<std::string> const& check_suites();

  //! Runs one suite, or every suite in turn when \p suite is "all".
  //!
  //! \throws Error with ErrorCode::invalid_argument for an unknown suite or
  //! options out of range.
  [[nodiscard]] std::vector<CheckReport> run_checks(std::string const&  suite,
                                                    CheckOptions const& opts);

}  // namespace polycyc

#endif  // POLYCYC_CHECKS_HPP_
