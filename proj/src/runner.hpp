#ifndef POLYSOL_RUNNER_HPP
#define POLYSOL_RUNNER_HPP

#include <string>

#include "polysol/format.hpp"
#include "problem.hpp"

namespace polysol::cli {

struct RunFlags {
  bool verify = false;
  bool json_output = false;
  TermStyle style = TermStyle::ascii;
};

struct RunOutcome {
  int exit_code = 0;  // 0 ok, 4 verification failed
  std::string output;
};

// Dispatches a parsed problem to the matching solver. Throws ParseError for
// input problems (exit 2) and std::invalid_argument for violated solver
// preconditions (exit 3).
RunOutcome run_solve(const ProblemFile& problem, const RunFlags& flags);

// Re-checks a previously produced solution document against the problem's
// forward operator.
RunOutcome run_verify(const ProblemFile& problem, const std::string& solution_text,
                      const RunFlags& flags);

}  // namespace polysol::cli

#endif
