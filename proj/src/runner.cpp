#include "runner.hpp"

#include <optional>
#include <sstream>
#include <type_traits>
#include <utility>
#include <vector>

#include "polysol/helmholtz_family.hpp"
#include "polysol/laplace_family.hpp"
#include "polysol/rings.hpp"
#include "polysol/verify.hpp"

namespace polysol::cli {

namespace {

using nlohmann::json;

template <class T>
struct is_complex_ring : std::false_type {};
template <class U>
struct is_complex_ring<Complex<U>> : std::true_type {};

template <class T>
Polynomial<T> to_polynomial(const ComponentLiteral& terms, int dim) {
  Polynomial<T> p(dim);
  for (const auto& t : terms) {
    p.add_term(MultiIndex(t.exponents), parse_coefficient<T>(t.coef));
  }
  return p;
}

template <class T>
PolyVector<T> to_poly_vector(const std::vector<ComponentLiteral>& comps, int dim) {
  std::vector<Polynomial<T>> v;
  v.reserve(comps.size());
  for (const auto& c : comps) v.push_back(to_polynomial<T>(c, dim));
  return PolyVector<T>(std::move(v));
}

template <class T>
T to_param(const ProblemFile& p, const std::string& name) {
  return parse_coefficient<T>(p.params.at(name));
}

template <class T>
T to_param_or(const ProblemFile& p, const std::string& name, long long fallback) {
  auto it = p.params.find(name);
  return it == p.params.end() ? from_int<T>(fallback) : parse_coefficient<T>(it->second);
}

template <class T>
AnisotropyMatrix<T> to_matrix(const MatrixLiteral& rows, int dim) {
  std::vector<T> entries;
  entries.reserve(static_cast<size_t>(dim) * static_cast<size_t>(dim));
  for (const auto& row : rows) {
    for (const auto& lit : row) entries.push_back(parse_coefficient<T>(lit));
  }
  return AnisotropyMatrix<T>(dim, std::move(entries));
}

// Solver output plus the optional verification report, ring-erased into
// strings/JSON by the formatting layer below.
template <class T>
struct TypedResult {
  std::vector<std::pair<std::string, std::vector<Polynomial<T>>>> fields;
  std::optional<ResidualReport<T>> report;
};

template <class T>
TypedResult<T> solve_typed(const ProblemFile& p, bool verify) {
  TypedResult<T> out;
  switch (p.pde) {
    case PdeTag::helmholtz: {
      const Polynomial<T> f = to_polynomial<T>(p.rhs.at(0), p.dim);
      const HelmholtzParams<T> params{to_param<T>(p, "k")};
      Polynomial<T> u = solve_helmholtz(f, params);
      if (verify) out.report = residual(params, u, f);
      out.fields.emplace_back("u", std::vector<Polynomial<T>>{std::move(u)});
      break;
    }
    case PdeTag::zeroth_order: {
      const Polynomial<T> f = to_polynomial<T>(p.rhs.at(0), p.dim);
      const ZerothOrderParams<T> params{to_param<T>(p, "alpha"),
                                        DiffOperator<T>(to_polynomial<T>(*p.op_symbol, p.dim))};
      Polynomial<T> u = solve_zeroth_order(f, params);
      if (verify) out.report = residual(params, u, f);
      out.fields.emplace_back("u", std::vector<Polynomial<T>>{std::move(u)});
      break;
    }
    case PdeTag::elastodynamics: {
      if constexpr (RingTraits<T>::orderable) {
        const PolyVector<T> f = to_poly_vector<T>(p.rhs, p.dim);
        const ElastodynamicsParams<T> params{to_param<T>(p, "rho"), to_param<T>(p, "mu"),
                                             to_param<T>(p, "nu"), to_param<T>(p, "omega")};
        PolyVector<T> u = solve_elastodynamics(f, params);
        if (verify) out.report = residual(params, u, f);
        out.fields.emplace_back("u", u.components());
      } else {
        throw std::invalid_argument("elastodynamics requires an ordered coefficient ring");
      }
      break;
    }
    case PdeTag::maxwell: {
      if constexpr (is_complex_ring<T>::value) {
        const PolyVector<T> current = to_poly_vector<T>(p.rhs, p.dim);
        MaxwellParams<T> params;
        params.eps = to_param_or<T>(p, "eps", 1);
        params.mu = to_param_or<T>(p, "mu", 1);
        params.omega = to_param_or<T>(p, "omega", 1);
        std::optional<Polynomial<T>> charge;
        if (p.charge) charge = to_polynomial<T>(*p.charge, p.dim);
        MaxwellSolution<T> sol = solve_maxwell(current, params, charge);
        if (verify) out.report = residual(params, sol, current);
        out.fields.emplace_back("E", sol.electric.components());
        out.fields.emplace_back("H", sol.magnetic.components());
        out.fields.emplace_back("A", sol.vector_potential.components());
        out.fields.emplace_back("phi", std::vector<Polynomial<T>>{sol.scalar_potential});
        out.fields.emplace_back("rho", std::vector<Polynomial<T>>{sol.charge_density});
      } else {
        throw std::invalid_argument("maxwell needs a complex coefficient ring; interval mode is unsupported");
      }
      break;
    }
    case PdeTag::poisson: {
      const Polynomial<T> f = to_polynomial<T>(p.rhs.at(0), p.dim);
      Polynomial<T> u = solve_poisson(f);
      if (verify) out.report = residual(PoissonPde{}, u, f);
      out.fields.emplace_back("u", std::vector<Polynomial<T>>{std::move(u)});
      break;
    }
    case PdeTag::bilaplace: {
      const Polynomial<T> f = to_polynomial<T>(p.rhs.at(0), p.dim);
      auto it = p.params.find("method");
      const BilaplaceMethod method = (it != p.params.end() && it->second == "direct")
                                         ? BilaplaceMethod::direct
                                         : BilaplaceMethod::iterated;
      Polynomial<T> u = solve_bilaplace(f, method);
      if (verify) out.report = residual(BilaplacePde{method}, u, f);
      out.fields.emplace_back("u", std::vector<Polynomial<T>>{std::move(u)});
      break;
    }
    case PdeTag::elastostatics: {
      if constexpr (RingTraits<T>::orderable) {
        const PolyVector<T> f = to_poly_vector<T>(p.rhs, p.dim);
        const ElastostaticsParams<T> params{to_param<T>(p, "nu"), to_param_or<T>(p, "mu", 1)};
        PolyVector<T> u = solve_elastostatics(f, params);
        if (verify) out.report = residual(params, u, f);
        out.fields.emplace_back("u", u.components());
      } else {
        throw std::invalid_argument("elastostatics requires an ordered coefficient ring");
      }
      break;
    }
    case PdeTag::stokes: {
      if constexpr (RingTraits<T>::orderable) {
        const PolyVector<T> f = to_poly_vector<T>(p.rhs, p.dim);
        const StokesParams<T> params{to_param<T>(p, "mu")};
        StokesSolution<T> sol = solve_stokes(f, params);
        if (verify) out.report = residual(params, sol, f);
        out.fields.emplace_back("u", sol.velocity.components());
        out.fields.emplace_back("p", std::vector<Polynomial<T>>{sol.pressure});
      } else {
        throw std::invalid_argument("stokes requires an ordered coefficient ring");
      }
      break;
    }
    case PdeTag::anisotropic_poisson: {
      const Polynomial<T> f = to_polynomial<T>(p.rhs.at(0), p.dim);
      AnisotropicPoissonPde<T> pde{to_matrix<T>(*p.matrix, p.dim)};
      Polynomial<T> u = solve_anisotropic_poisson(f, pde.matrix);
      if (verify) out.report = residual(pde, u, f);
      out.fields.emplace_back("u", std::vector<Polynomial<T>>{std::move(u)});
      break;
    }
    case PdeTag::factorized_anisotropic: {
      const Polynomial<T> f = to_polynomial<T>(p.rhs.at(0), p.dim);
      FactorizedAnisotropicPde<T> pde{{}};
      for (const auto& m : *p.factors) pde.factors.push_back(to_matrix<T>(m, p.dim));
      Polynomial<T> g = solve_factorized_anisotropic(f, pde.factors);
      if (verify) out.report = residual(pde, g, f);
      out.fields.emplace_back("u", std::vector<Polynomial<T>>{std::move(g)});
      break;
    }
  }
  return out;
}

template <class T>
json terms_json(const Polynomial<T>& p) {
  json arr = json::array();
  for (const auto& [alpha, c] : p.terms()) {
    arr.push_back(json{{"exp", alpha.exponents()}, {"coef", format_coefficient(c)}});
  }
  return arr;
}

template <class T>
json verification_json(const ResidualReport<T>& report) {
  json v;
  v["passed"] = report.passed();
  v["exact_zero"] = report.exact_zero;
  v["all_contain_zero"] = report.all_contain_zero;
  v["max_coeff_magnitude"] = report.max_coeff_magnitude;
  v["rhs_scale"] = report.rhs_scale;
  json residuals = json::object();
  for (const auto& [name, poly] : report.residuals) residuals[name] = to_string(poly);
  v["residuals"] = residuals;
  for (const auto& [name, poly] : report.constraints) v[name] = to_string(poly);
  return v;
}

template <class T>
void verification_text(const ResidualReport<T>& report, std::ostringstream& out) {
  out << "verification: " << (report.passed() ? "pass" : "FAIL") << "\n";
  out << "exact_zero = " << (report.exact_zero ? "true" : "false") << "\n";
  out << "max_coeff_magnitude = " << format_coefficient(report.max_coeff_magnitude) << "\n";
  for (const auto& [name, poly] : report.constraints) {
    out << name << " = " << to_string(poly) << "\n";
  }
  if (!report.passed()) {
    for (const auto& [name, poly] : report.residuals) {
      if (!poly.is_zero()) out << name << " = " << to_string(poly) << "\n";
    }
  }
}

template <class T>
RunOutcome render(const ProblemFile& p, const TypedResult<T>& result, const RunFlags& flags) {
  RunOutcome outcome;
  if (result.report && !result.report->passed()) outcome.exit_code = 4;

  if (flags.json_output) {
    json doc;
    doc["dim"] = p.dim;
    doc["pde"] = pde_name(p.pde);
    doc["mode"] = mode_name(effective_mode(p.pde, p.mode));
    json solution = json::object();
    for (const auto& [name, comps] : result.fields) {
      json arr = json::array();
      for (const auto& poly : comps) arr.push_back(terms_json(poly));
      solution[name] = arr;
    }
    doc["solution"] = solution;
    if (result.report) doc["verification"] = verification_json(*result.report);
    outcome.output = doc.dump(2) + "\n";
    return outcome;
  }

  std::ostringstream out;
  for (const auto& [name, comps] : result.fields) {
    if (name == "A" || name == "phi" || name == "rho") continue;  // potentials live in the JSON form
    if (result.fields.size() == 1 && comps.size() == 1) {
      out << to_string(comps[0], flags.style) << "\n";
    } else {
      for (size_t i = 0; i < comps.size(); ++i) {
        out << name;
        if (comps.size() > 1) out << i + 1;
        out << " = " << to_string(comps[i], flags.style) << "\n";
      }
    }
  }
  if (result.report) verification_text(*result.report, out);
  outcome.output = out.str();
  return outcome;
}

template <class T>
RunOutcome run_typed(const ProblemFile& p, const RunFlags& flags) {
  const TypedResult<T> result = solve_typed<T>(p, flags.verify);
  return render(p, result, flags);
}

template <class Fn>
RunOutcome dispatch_mode(Mode mode, Fn&& fn) {
  switch (mode) {
    case Mode::real_double: return fn.template operator()<double>();
    case Mode::rational:
    case Mode::rational_big: return fn.template operator()<Rational>();
    case Mode::interval: return fn.template operator()<Interval>();
    case Mode::complex_double: return fn.template operator()<ComplexDouble>();
    case Mode::complex_rational: return fn.template operator()<ComplexRational>();
  }
  throw std::logic_error("unreachable mode");
}

// ---- standalone verification of a solution document ----

template <class T>
std::vector<Polynomial<T>> read_solution_field(const json& solution, const std::string& name,
                                               int dim, Mode mode, int expect_count) {
  if (!solution.contains(name)) {
    throw ParseError("solution." + name + ": missing field for this pde family");
  }
  const json& field = solution.at(name);
  if (!field.is_array() || (expect_count > 0 && static_cast<int>(field.size()) != expect_count)) {
    throw ParseError("solution." + name + ": expected " + std::to_string(expect_count) +
                     " component(s)");
  }
  std::vector<Polynomial<T>> out;
  int i = 0;
  for (const auto& comp : field) {
    const ComponentLiteral lit =
        component_from_json(comp, dim, mode, "solution." + name + "[" + std::to_string(i++) + "]");
    out.push_back(to_polynomial<T>(lit, dim));
  }
  return out;
}

template <class T>
RunOutcome verify_typed(const ProblemFile& p, const json& solution, const RunFlags& flags) {
  const Mode mode = effective_mode(p.pde, p.mode);
  ResidualReport<T> report;
  switch (p.pde) {
    case PdeTag::helmholtz: {
      auto u = read_solution_field<T>(solution, "u", p.dim, mode, 1);
      report = residual(HelmholtzParams<T>{to_param<T>(p, "k")}, u[0],
                        to_polynomial<T>(p.rhs.at(0), p.dim));
      break;
    }
    case PdeTag::zeroth_order: {
      auto u = read_solution_field<T>(solution, "u", p.dim, mode, 1);
      report = residual(ZerothOrderParams<T>{to_param<T>(p, "alpha"),
                                             DiffOperator<T>(to_polynomial<T>(*p.op_symbol, p.dim))},
                        u[0], to_polynomial<T>(p.rhs.at(0), p.dim));
      break;
    }
    case PdeTag::elastodynamics: {
      if constexpr (RingTraits<T>::orderable) {
        auto u = read_solution_field<T>(solution, "u", p.dim, mode, p.dim);
        report = residual(ElastodynamicsParams<T>{to_param<T>(p, "rho"), to_param<T>(p, "mu"),
                                                  to_param<T>(p, "nu"), to_param<T>(p, "omega")},
                          PolyVector<T>(std::move(u)), to_poly_vector<T>(p.rhs, p.dim));
      } else {
        throw std::invalid_argument("elastodynamics requires an ordered coefficient ring");
      }
      break;
    }
    case PdeTag::maxwell: {
      if constexpr (is_complex_ring<T>::value) {
        MaxwellParams<T> params;
        params.eps = to_param_or<T>(p, "eps", 1);
        params.mu = to_param_or<T>(p, "mu", 1);
        params.omega = to_param_or<T>(p, "omega", 1);
        const PolyVector<T> current = to_poly_vector<T>(p.rhs, p.dim);
        MaxwellSolution<T> sol{
            PolyVector<T>(read_solution_field<T>(solution, "E", p.dim, mode, 3)),
            PolyVector<T>(read_solution_field<T>(solution, "H", p.dim, mode, 3)),
            PolyVector<T>(read_solution_field<T>(solution, "A", p.dim, mode, 3)),
            read_solution_field<T>(solution, "phi", p.dim, mode, 1)[0], Polynomial<T>(p.dim)};
        if (solution.contains("rho")) {
          sol.charge_density = read_solution_field<T>(solution, "rho", p.dim, mode, 1)[0];
        } else if (p.charge) {
          sol.charge_density = to_polynomial<T>(*p.charge, p.dim);
        } else {
          sol.charge_density = divergence(current) / (T::i() * params.omega);
        }
        report = residual(params, sol, current);
      } else {
        throw std::invalid_argument("maxwell needs a complex coefficient ring; interval mode is unsupported");
      }
      break;
    }
    case PdeTag::poisson: {
      auto u = read_solution_field<T>(solution, "u", p.dim, mode, 1);
      report = residual(PoissonPde{}, u[0], to_polynomial<T>(p.rhs.at(0), p.dim));
      break;
    }
    case PdeTag::bilaplace: {
      auto u = read_solution_field<T>(solution, "u", p.dim, mode, 1);
      report = residual(BilaplacePde{}, u[0], to_polynomial<T>(p.rhs.at(0), p.dim));
      break;
    }
    case PdeTag::elastostatics: {
      if constexpr (RingTraits<T>::orderable) {
        auto u = read_solution_field<T>(solution, "u", p.dim, mode, p.dim);
        report = residual(ElastostaticsParams<T>{to_param<T>(p, "nu"), to_param_or<T>(p, "mu", 1)},
                          PolyVector<T>(std::move(u)), to_poly_vector<T>(p.rhs, p.dim));
      } else {
        throw std::invalid_argument("elastostatics requires an ordered coefficient ring");
      }
      break;
    }
    case PdeTag::stokes: {
      if constexpr (RingTraits<T>::orderable) {
        auto u = read_solution_field<T>(solution, "u", p.dim, mode, p.dim);
        auto pr = read_solution_field<T>(solution, "p", p.dim, mode, 1);
        report = residual(StokesParams<T>{to_param<T>(p, "mu")},
                          StokesSolution<T>{PolyVector<T>(std::move(u)), std::move(pr[0])},
                          to_poly_vector<T>(p.rhs, p.dim));
      } else {
        throw std::invalid_argument("stokes requires an ordered coefficient ring");
      }
      break;
    }
    case PdeTag::anisotropic_poisson: {
      auto u = read_solution_field<T>(solution, "u", p.dim, mode, 1);
      report = residual(AnisotropicPoissonPde<T>{to_matrix<T>(*p.matrix, p.dim)}, u[0],
                        to_polynomial<T>(p.rhs.at(0), p.dim));
      break;
    }
    case PdeTag::factorized_anisotropic: {
      auto u = read_solution_field<T>(solution, "u", p.dim, mode, 1);
      FactorizedAnisotropicPde<T> pde{{}};
      for (const auto& m : *p.factors) pde.factors.push_back(to_matrix<T>(m, p.dim));
      report = residual(pde, u[0], to_polynomial<T>(p.rhs.at(0), p.dim));
      break;
    }
  }

  RunOutcome outcome;
  if (!report.passed()) outcome.exit_code = 4;
  if (flags.json_output) {
    json doc;
    doc["verification"] = verification_json(report);
    outcome.output = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    verification_text(report, out);
    outcome.output = out.str();
  }
  return outcome;
}

}  // namespace

RunOutcome run_solve(const ProblemFile& problem, const RunFlags& flags) {
  const Mode mode = effective_mode(problem.pde, problem.mode);
  return dispatch_mode(mode, [&]<class T>() { return run_typed<T>(problem, flags); });
}

RunOutcome run_verify(const ProblemFile& problem, const std::string& solution_text,
                      const RunFlags& flags) {
  json doc;
  try {
    doc = json::parse(solution_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("solution file: malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("solution") || !doc.at("solution").is_object()) {
    throw ParseError("solution file: missing 'solution' object");
  }
  const json solution = doc.at("solution");
  const Mode mode = effective_mode(problem.pde, problem.mode);
  return dispatch_mode(mode, [&]<class T>() { return verify_typed<T>(problem, solution, flags); });
}

}  // namespace polysol::cli
