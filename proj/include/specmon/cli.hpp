#ifndef SPECMON_CLI_HPP_
#define SPECMON_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "specmon/oracle.hpp"
#include "specmon/small_cancellation.hpp"

namespace specmon::cli {

  enum ExitCode : int {
    exit_yes          = 0,
    exit_no           = 1,
    exit_unknown      = 2,
    exit_usage        = 64,
    exit_input        = 65,
    exit_inconclusive = 69,
    exit_internal     = 70,
  };

  struct CliConfig {
    std::string              command;
    std::string              input;
    std::vector<std::string> words;
    OracleBudget             budget;
    Rational                 alpha{2, 11};
    bool                     greendlinger = false;
    bool                     json         = false;
  };

  struct CliResult {
    int         exit_code = exit_yes;
    std::string output;
  };

  // Runs one subcommand. Never throws; failures become exit codes.
  CliResult run(CliConfig const& config);

  // Parses argv, runs, prints to `out` / `err`, returns the exit code.
  int main(int argc, char const* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace specmon::cli

#endif  // SPECMON_CLI_HPP_
