#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cclosed::cli {

  enum ExitCode : int { success = 0, findings = 1, usage_error = 2 };

  //! Runs one command line (without the program name) and returns the exit
  //! code: 0 on success, 1 when the input fails a checked property, 2 on
  //! usage or parse errors.
  //!
  //!   validate FILE
  //!   analyze FILE
  //!   classify EXPRESSION|FILE
  //!   quotient FILE (--ideal ELEMS | --pairs X:Y,...)
  //!   power FILE
  //!   enumerate --order N [--up-to-iso] [--out DIR]
  //!   suite --max-order N [--up-to-iso] [--counterexamples DIR]
  //!
  //! Every command accepts --json for machine-readable output.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace cclosed::cli
