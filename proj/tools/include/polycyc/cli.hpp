// This file declares the entry point of the polycyc command line tool.

#ifndef POLYCYC_CLI_HPP_
#define POLYCYC_CLI_HPP_

#include <iosfwd>  // for ostream
#include <string>  // for string
#include <vector>  // for vector

namespace polycyc::cli {

  enum ExitCode : int { ok = 0, failure = 1, usage = 2 };

  //! Runs one invocation. \p args excludes the program name. Results go to
  //! \p out and one-line diagnostics to \p err.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace polycyc::cli

#endif  // POLYCYC_CLI_HPP_
