#include "problem.hpp"

#include <algorithm>
#include <set>

namespace polysol::cli {

namespace {

using nlohmann::json;

struct ModeEntry {
  Mode mode;
  const char* name;
};

constexpr ModeEntry kModes[] = {
    {Mode::real_double, "double"},       {Mode::rational, "rational"},
    {Mode::rational_big, "rational-big"}, {Mode::interval, "interval"},
    {Mode::complex_double, "complex"},   {Mode::complex_rational, "complex-rational"},
};

struct PdeEntry {
  PdeTag tag;
  const char* name;
};

constexpr PdeEntry kPdes[] = {
    {PdeTag::helmholtz, "helmholtz"},
    {PdeTag::zeroth_order, "zeroth-order"},
    {PdeTag::elastodynamics, "elastodynamics"},
    {PdeTag::maxwell, "maxwell"},
    {PdeTag::poisson, "poisson"},
    {PdeTag::bilaplace, "bilaplace"},
    {PdeTag::elastostatics, "elastostatics"},
    {PdeTag::stokes, "stokes"},
    {PdeTag::anisotropic_poisson, "anisotropic-poisson"},
    {PdeTag::factorized_anisotropic, "factorized-anisotropic"},
};

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

// required and optional parameter names per family
void param_schema(PdeTag tag, std::set<std::string>& required, std::set<std::string>& optional) {
  switch (tag) {
    case PdeTag::helmholtz: required = {"k"}; break;
    case PdeTag::zeroth_order: required = {"alpha"}; break;
    case PdeTag::elastodynamics: required = {"rho", "mu", "nu", "omega"}; break;
    case PdeTag::maxwell: optional = {"eps", "mu", "omega"}; break;
    case PdeTag::poisson: break;
    case PdeTag::bilaplace: optional = {"method"}; break;
    case PdeTag::elastostatics: required = {"nu"}; optional = {"mu"}; break;
    case PdeTag::stokes: required = {"mu"}; break;
    case PdeTag::anisotropic_poisson: break;
    case PdeTag::factorized_anisotropic: break;
  }
}

void validate_literal(Mode mode, const std::string& literal, const std::string& where) {
  try {
    switch (mode) {
      case Mode::real_double: parse_coefficient<double>(literal); break;
      case Mode::rational:
      case Mode::rational_big: parse_coefficient<Rational>(literal); break;
      case Mode::interval: parse_coefficient<Interval>(literal); break;
      case Mode::complex_double: parse_coefficient<ComplexDouble>(literal); break;
      case Mode::complex_rational: parse_coefficient<ComplexRational>(literal); break;
    }
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

int read_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

std::string read_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

ComponentLiteral read_terms(const json& j, int dim, Mode mode, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of terms");
  ComponentLiteral terms;
  int index = 0;
  for (const auto& t : j) {
    const std::string term_where = where + "[" + std::to_string(index++) + "]";
    if (!t.is_object()) fail(term_where, "expected an object with 'exp' and 'coef'");
    for (const auto& [key, value] : t.items()) {
      if (key != "exp" && key != "coef") fail(term_where, "unknown field '" + key + "'");
    }
    if (!t.contains("exp") || !t.contains("coef")) fail(term_where, "term needs 'exp' and 'coef'");
    const json& exp = t.at("exp");
    if (!exp.is_array()) fail(term_where + ".exp", "expected an array of integers");
    TermLiteral term;
    for (const auto& e : exp) {
      const int v = read_int(e, term_where + ".exp");
      if (v < 0) fail(term_where + ".exp", "exponents must be non-negative");
      term.exponents.push_back(v);
    }
    if (static_cast<int>(term.exponents.size()) != dim) {
      fail(term_where + ".exp", "length " + std::to_string(term.exponents.size()) +
                                    " does not match dim " + std::to_string(dim));
    }
    term.coef = read_string(t.at("coef"), term_where + ".coef");
    validate_literal(mode, term.coef, term_where + ".coef");
    terms.push_back(std::move(term));
  }
  return terms;
}

MatrixLiteral read_matrix(const json& j, int dim, Mode mode, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    fail(where, "expected " + std::to_string(dim) + " rows");
  }
  MatrixLiteral rows;
  int r = 0;
  for (const auto& row : j) {
    const std::string row_where = where + "[" + std::to_string(r++) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      fail(row_where, "expected " + std::to_string(dim) + " entries");
    }
    std::vector<std::string> entries;
    for (const auto& e : row) {
      std::string literal = read_string(e, row_where);
      validate_literal(mode, literal, row_where);
      entries.push_back(std::move(literal));
    }
    rows.push_back(std::move(entries));
  }
  return rows;
}

json terms_to_json(const ComponentLiteral& terms) {
  json arr = json::array();
  for (const auto& t : terms) {
    arr.push_back(json{{"exp", t.exponents}, {"coef", t.coef}});
  }
  return arr;
}

}  // namespace

const char* mode_name(Mode mode) {
  for (const auto& e : kModes) {
    if (e.mode == mode) return e.name;
  }
  return "?";
}

std::optional<Mode> mode_from_name(const std::string& name) {
  for (const auto& e : kModes) {
    if (name == e.name) return e.mode;
  }
  return std::nullopt;
}

const char* pde_name(PdeTag tag) {
  for (const auto& e : kPdes) {
    if (e.tag == tag) return e.name;
  }
  return "?";
}

std::optional<PdeTag> pde_from_name(const std::string& name) {
  for (const auto& e : kPdes) {
    if (name == e.name) return e.tag;
  }
  return std::nullopt;
}

bool pde_is_vector_field(PdeTag tag) {
  return tag == PdeTag::elastodynamics || tag == PdeTag::elastostatics || tag == PdeTag::stokes ||
         tag == PdeTag::maxwell;
}

Mode effective_mode(PdeTag tag, Mode mode) {
  if (tag != PdeTag::maxwell) return mode;
  switch (mode) {
    case Mode::real_double: return Mode::complex_double;
    case Mode::rational:
    case Mode::rational_big: return Mode::complex_rational;
    default: return mode;
  }
}

ProblemFile parse_problem(const std::string& text, std::optional<Mode> mode_override) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("problem file must be a JSON object");

  ProblemFile p;

  if (!doc.contains("pde")) fail("pde", "missing required field");
  const std::string pde_str = read_string(doc.at("pde"), "pde");
  const auto tag = pde_from_name(pde_str);
  if (!tag) fail("pde", "unknown pde tag '" + pde_str + "'");
  p.pde = *tag;

  std::set<std::string> allowed = {"dim", "pde", "mode", "params", "rhs"};
  if (p.pde == PdeTag::anisotropic_poisson) allowed.insert("matrix");
  if (p.pde == PdeTag::factorized_anisotropic) allowed.insert("factors");
  if (p.pde == PdeTag::zeroth_order) allowed.insert("operator");
  if (p.pde == PdeTag::maxwell) allowed.insert("charge");
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.count(key)) fail(key, "unknown field");
  }

  if (!doc.contains("dim")) fail("dim", "missing required field");
  p.dim = read_int(doc.at("dim"), "dim");
  if (p.dim < 1) fail("dim", "must be >= 1");

  if (!doc.contains("mode")) fail("mode", "missing required field");
  const std::string mode_str = read_string(doc.at("mode"), "mode");
  const auto mode = mode_from_name(mode_str);
  if (!mode) fail("mode", "unknown mode '" + mode_str + "'");
  p.mode = mode_override.value_or(*mode);

  // literals are validated against the ring the solver will actually use
  const Mode literal_mode = effective_mode(p.pde, p.mode);

  std::set<std::string> required, optional;
  param_schema(p.pde, required, optional);
  if (doc.contains("params")) {
    const json& params = doc.at("params");
    if (!params.is_object()) fail("params", "expected an object");
    for (const auto& [key, value] : params.items()) {
      if (!required.count(key) && !optional.count(key)) {
        fail("params." + key, "unknown parameter for pde '" + std::string(pde_name(p.pde)) + "'");
      }
      std::string literal = read_string(value, "params." + key);
      if (p.pde == PdeTag::bilaplace && key == "method") {
        if (literal != "iterated" && literal != "direct") {
          fail("params.method", "must be 'iterated' or 'direct'");
        }
      } else {
        validate_literal(literal_mode, literal, "params." + key);
      }
      p.params.emplace(key, std::move(literal));
    }
  }
  for (const auto& name : required) {
    if (!p.params.count(name)) fail("params." + name, "missing required parameter");
  }

  if (!doc.contains("rhs")) fail("rhs", "missing required field");
  const json& rhs = doc.at("rhs");
  if (!rhs.is_array()) fail("rhs", "expected an array of components");
  const int expected_components =
      p.pde == PdeTag::maxwell ? 3 : (pde_is_vector_field(p.pde) ? p.dim : 1);
  if (static_cast<int>(rhs.size()) != expected_components) {
    fail("rhs", "pde '" + std::string(pde_name(p.pde)) + "' needs " +
                    std::to_string(expected_components) + " component(s), got " +
                    std::to_string(rhs.size()));
  }
  if (p.pde == PdeTag::maxwell && p.dim != 3) fail("dim", "maxwell requires dim 3");
  int ci = 0;
  for (const auto& comp : rhs) {
    p.rhs.push_back(read_terms(comp, p.dim, literal_mode, "rhs[" + std::to_string(ci++) + "]"));
  }

  if (p.pde == PdeTag::anisotropic_poisson) {
    if (!doc.contains("matrix")) fail("matrix", "missing required field for anisotropic-poisson");
    p.matrix = read_matrix(doc.at("matrix"), p.dim, literal_mode, "matrix");
  }
  if (p.pde == PdeTag::factorized_anisotropic) {
    if (!doc.contains("factors")) fail("factors", "missing required field for factorized-anisotropic");
    const json& factors = doc.at("factors");
    if (!factors.is_array()) fail("factors", "expected an array of matrices");
    std::vector<MatrixLiteral> out;
    int fi = 0;
    for (const auto& m : factors) {
      out.push_back(read_matrix(m, p.dim, literal_mode, "factors[" + std::to_string(fi++) + "]"));
    }
    p.factors = std::move(out);
  }
  if (p.pde == PdeTag::zeroth_order) {
    if (!doc.contains("operator")) fail("operator", "missing required field for zeroth-order");
    p.op_symbol = read_terms(doc.at("operator"), p.dim, literal_mode, "operator");
  }
  if (p.pde == PdeTag::maxwell && doc.contains("charge")) {
    p.charge = read_terms(doc.at("charge"), p.dim, literal_mode, "charge");
  }

  return p;
}

ComponentLiteral component_from_json(const nlohmann::json& j, int dim, Mode mode,
                                     const std::string& where) {
  return read_terms(j, dim, mode, where);
}

nlohmann::json problem_to_json(const ProblemFile& p) {
  json doc;
  doc["dim"] = p.dim;
  doc["pde"] = pde_name(p.pde);
  doc["mode"] = mode_name(p.mode);
  json params = json::object();
  for (const auto& [key, value] : p.params) params[key] = value;
  doc["params"] = params;
  json rhs = json::array();
  for (const auto& comp : p.rhs) rhs.push_back(terms_to_json(comp));
  doc["rhs"] = rhs;
  if (p.matrix) doc["matrix"] = *p.matrix;
  if (p.factors) doc["factors"] = *p.factors;
  if (p.op_symbol) doc["operator"] = terms_to_json(*p.op_symbol);
  if (p.charge) doc["charge"] = terms_to_json(*p.charge);
  return doc;
}

}  // namespace polysol::cli
