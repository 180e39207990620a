#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "../src/problem.hpp"
#include "../src/runner.hpp"

namespace {

using namespace polysol;
using namespace polysol::cli;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::optional<Mode> parse_mode_flag(const std::string& value) {
  if (value.empty()) return std::nullopt;
  const auto mode = mode_from_name(value);
  if (!mode) throw ParseError("unknown mode '" + value + "'");
  return mode;
}

TermStyle style_from_env() {
  const char* env = std::getenv("POLYSOL_UNICODE");
  return (env && std::string(env) == "1") ? TermStyle::unicode : TermStyle::ascii;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-form polynomial particular solutions for constant-coefficient PDEs"};
  app.require_subcommand(1);

  std::string problem_path, solution_path, mode_str;
  std::string output = "text";
  bool verify_flag = false;

  CLI::App* solve_cmd = app.add_subcommand("solve", "solve a problem file");
  solve_cmd->add_option("file", problem_path, "problem JSON file")->required();
  solve_cmd->add_flag("--verify", verify_flag, "apply the forward operator to the solution");
  solve_cmd->add_option("--output", output, "output format")->check(CLI::IsMember({"text", "json"}));
  solve_cmd->add_option("--mode", mode_str, "override the file's coefficient ring");

  CLI::App* verify_cmd = app.add_subcommand("verify", "verify a solution file against a problem");
  verify_cmd->add_option("file", problem_path, "problem JSON file")->required();
  verify_cmd->add_option("solution", solution_path, "solution JSON file")->required();
  verify_cmd->add_option("--output", output, "output format")->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--mode", mode_str, "override the file's coefficient ring");

  CLI11_PARSE(app, argc, argv);

  try {
    RunFlags flags;
    flags.verify = verify_flag;
    flags.json_output = output == "json";
    flags.style = style_from_env();

    const ProblemFile problem = parse_problem(read_file(problem_path), parse_mode_flag(mode_str));

    RunOutcome outcome;
    if (solve_cmd->parsed()) {
      outcome = run_solve(problem, flags);
    } else {
      outcome = run_verify(problem, read_file(solution_path), flags);
    }
    std::cout << outcome.output;
    return outcome.exit_code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "solve error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
