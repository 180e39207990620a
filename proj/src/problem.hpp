#ifndef POLYSOL_PROBLEM_HPP
#define POLYSOL_PROBLEM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polysol/literals.hpp"

// Problem-file model. Coefficient values stay as literal strings until a
// solver run binds them to a ring, so serializing a parsed problem
// reproduces the input exactly.

namespace polysol::cli {

enum class Mode { real_double, rational, rational_big, interval, complex_double, complex_rational };

enum class PdeTag {
  helmholtz,
  zeroth_order,
  elastodynamics,
  maxwell,
  poisson,
  bilaplace,
  elastostatics,
  stokes,
  anisotropic_poisson,
  factorized_anisotropic,
};

const char* mode_name(Mode mode);
std::optional<Mode> mode_from_name(const std::string& name);
const char* pde_name(PdeTag tag);
std::optional<PdeTag> pde_from_name(const std::string& name);

// vector-valued right-hand side with component count = dim
bool pde_is_vector_field(PdeTag tag);

// ring actually used by the solver: Maxwell promotes real modes to the
// matching complex ring so the solution can carry complex coefficients
Mode effective_mode(PdeTag tag, Mode mode);

struct TermLiteral {
  std::vector<int> exponents;
  std::string coef;
  bool operator==(const TermLiteral&) const = default;
};

using ComponentLiteral = std::vector<TermLiteral>;
using MatrixLiteral = std::vector<std::vector<std::string>>;

struct ProblemFile {
  int dim = 0;
  PdeTag pde = PdeTag::helmholtz;
  Mode mode = Mode::real_double;
  std::map<std::string, std::string> params;
  std::vector<ComponentLiteral> rhs;
  std::optional<MatrixLiteral> matrix;            // anisotropic-poisson
  std::optional<std::vector<MatrixLiteral>> factors;  // factorized-anisotropic
  std::optional<ComponentLiteral> op_symbol;      // zeroth-order
  std::optional<ComponentLiteral> charge;         // maxwell
  bool operator==(const ProblemFile&) const = default;
};

// Throws ParseError with a field path on any violation. mode_override, when
// set, replaces the file's mode before literals are validated.
ProblemFile parse_problem(const std::string& text, std::optional<Mode> mode_override = std::nullopt);

nlohmann::json problem_to_json(const ProblemFile& problem);

// Term-list reader shared with solution files; validates exponent lengths
// and literal syntax for the given mode.
ComponentLiteral component_from_json(const nlohmann::json& j, int dim, Mode mode,
                                     const std::string& where);

}  // namespace polysol::cli

#endif
