// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code is the failure count.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "polysol/format.hpp"
#include "polysol/helmholtz_family.hpp"
#include "polysol/laplace_family.hpp"
#include "polysol/literals.hpp"
#include "polysol/rings.hpp"
#include "polysol/verify.hpp"
#include "test_support.hpp"

using namespace polysol;
using namespace polysol::testing;
using Q = Rational;
using P = Polynomial<Q>;
using C = ComplexRational;

namespace {

int failures = 0;
std::vector<std::string> problems;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
  problems.clear();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    problems.push_back(std::string("exception: ") + e.what());
  }
  std::printf("%s  criterion %d: %s\n", ok ? "PASS" : "FAIL", number, label.c_str());
  if (!ok) {
    ++failures;
    for (const auto& p : problems) std::printf("      %s\n", p.c_str());
  }
}

bool expect(bool cond, const std::string& note) {
  if (!cond) problems.push_back(note);
  return cond;
}

P mono(std::initializer_list<int> e, Q c) { return P::monomial(MultiIndex(e), c); }

Polynomial<C> cmono(std::initializer_list<int> e, Q re, Q im = Q(0)) {
  return Polynomial<C>::monomial(MultiIndex(e), C(re, im));
}

Polynomial<C> complexify(const P& p) {
  Polynomial<C> out(p.dim());
  for (const auto& [alpha, c] : p.terms()) out.add_term(alpha, C(c));
  return out;
}

double ulp(double x) { return std::nextafter(std::abs(x), 2 * std::abs(x)) - std::abs(x); }

// ---- criteria ----

bool golden_helmholtz() {
  bool ok = true;
  const P f = mono({2, 3, 1}, Q(1));
  const P u = solve_helmholtz(f, HelmholtzParams<Q>{Q(2)});
  P expected(3);
  expected.add_term(MultiIndex{0, 1, 1}, Q(3, 8));
  expected.add_term(MultiIndex{0, 3, 1}, Q(-1, 8));
  expected.add_term(MultiIndex{2, 1, 1}, Q(-3, 8));
  expected.add_term(MultiIndex{2, 3, 1}, Q(1, 4));
  ok &= expect(u == expected, "rational coefficients differ from the golden map");

  const auto fd = Polynomial<double>::monomial(MultiIndex{2, 3, 1}, 1.0);
  const auto ud = solve_helmholtz(fd, HelmholtzParams<double>{2.0});
  ok &= expect(ud.term_count() == 4, "double solve has unexpected terms");
  for (const auto& [alpha, c] : expected.terms()) {
    const double got = ud.coefficient(alpha);
    const double want = c.to_double_nearest();
    ok &= expect(std::abs(got - want) <= ulp(want), "double coefficient off by more than 1 ulp");
  }

  const int reps = 1000;
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) {
    volatile auto keep = solve_helmholtz(fd, HelmholtzParams<double>{2.0}).term_count();
    (void)keep;
  }
  const double per_solve =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
  ok &= expect(per_solve < 1e-3, "solve took " + std::to_string(per_solve * 1e3) + " ms");
  return ok;
}

bool golden_stokes() {
  bool ok = true;
  const PolyVector<Q> f({mono({1, 1}, Q(1)), mono({1, 0}, Q(1))});
  const auto sol = solve_stokes(f, StokesParams<Q>{Q(2)});

  const std::vector<std::pair<MultiIndex, Q>> u1 = {{MultiIndex{0, 3}, Q(-1, 96)},
                                                    {MultiIndex{2, 1}, Q(-1, 32)},
                                                    {MultiIndex{3, 1}, Q(1, 64)},
                                                    {MultiIndex{1, 3}, Q(5, 192)}};
  const std::vector<std::pair<MultiIndex, Q>> u2 = {{MultiIndex{1, 2}, Q(1, 32)},
                                                    {MultiIndex{3, 0}, Q(5, 96)},
                                                    {MultiIndex{4, 0}, Q(-5, 768)},
                                                    {MultiIndex{2, 2}, Q(-3, 128)},
                                                    {MultiIndex{0, 4}, Q(-5, 768)}};
  const std::vector<std::pair<MultiIndex, Q>> pr = {{MultiIndex{1, 1}, Q(-1, 4)},
                                                    {MultiIndex{0, 3}, Q(-1, 12)},
                                                    {MultiIndex{2, 1}, Q(-1, 4)}};
  ok &= expect(sol.velocity[0].term_count() == u1.size(), "u1 term count");
  for (const auto& [a, c] : u1) ok &= expect(sol.velocity[0].coefficient(a) == c, "u1 coefficient");
  ok &= expect(sol.velocity[1].term_count() == u2.size(), "u2 term count");
  for (const auto& [a, c] : u2) ok &= expect(sol.velocity[1].coefficient(a) == c, "u2 coefficient");
  ok &= expect(sol.pressure.term_count() == pr.size(), "pressure term count");
  for (const auto& [a, c] : pr) ok &= expect(sol.pressure.coefficient(a) == c, "pressure coefficient");
  ok &= expect(divergence(sol.velocity).is_zero(), "div u is not identically zero");
  return ok;
}

bool golden_maxwell() {
  bool ok = true;
  const PolyVector<C> current({cmono({2, 1, 0}, Q(1)), cmono({1, 0, 0}, Q(1)), cmono({0, 0, 0}, Q(1))});
  MaxwellParams<C> params;
  params.mu = C(Q(2));
  const auto sol = solve_maxwell(current, params);
  ok &= expect(sol.electric[0] == cmono({2, 1, 0}, Q(0), Q(-1)), "E1 != -i x^2 y");
  ok &= expect(sol.electric[1] == cmono({1, 0, 0}, Q(0), Q(-2)), "E2 != -2i x");
  ok &= expect(sol.electric[2] == cmono({0, 0, 0}, Q(0), Q(-1)), "E3 != -i");
  ok &= expect(sol.magnetic[0].is_zero() && sol.magnetic[1].is_zero(), "H1, H2 != 0");
  ok &= expect(sol.magnetic[2] == cmono({0, 0, 0}, Q(-1)) + cmono({2, 0, 0}, Q(1, 2)),
               "H3 != -1 + x^2/2");
  const auto rep = residual(params, sol, current);
  ok &= expect(rep.exact_zero, "a field-equation residual is nonzero");
  ok &= expect(rep.constraints.size() == 1 && rep.constraints[0].second.is_zero(),
               "Lorenz gauge residual is nonzero");
  return ok;
}

bool interval_enclosure() {
  bool ok = true;
  using PI = Polynomial<Interval>;
  const PI f = PI::monomial(MultiIndex{2, 3, 1}, Interval(1));
  const Interval k = parse_coefficient<Interval>("pi");
  const PI u = solve_helmholtz(f, HelmholtzParams<Interval>{k});

  const Q pi_hat = parse_coefficient<Q>("pi");
  const P exact = solve_helmholtz(mono({2, 3, 1}, Q(1)), HelmholtzParams<Q>{pi_hat});

  struct Box {
    MultiIndex key;
    double lo, hi;
  };
  const std::vector<Box> boxes = {{MultiIndex{0, 1, 1}, 0.0249637, 0.0249640},
                                  {MultiIndex{0, 3, 1}, -0.0205321, -0.0205318},
                                  {MultiIndex{2, 1, 1}, -0.0615960, -0.0615957},
                                  {MultiIndex{2, 3, 1}, 0.1013210, 0.1013220}};
  ok &= expect(u.term_count() == boxes.size(), "interval solution term count");
  for (const auto& box : boxes) {
    const Interval got = u.coefficient(box.key);
    ok &= expect(box.lo <= got.lo() && got.hi() <= box.hi,
                 "coefficient interval escapes its acceptance box");
    const Q exact_coeff = exact.coefficient(box.key);
    ok &= expect(Rational::from_double_exact(got.lo()) <= exact_coeff &&
                     exact_coeff <= Rational::from_double_exact(got.hi()),
                 "interval does not contain the high-precision rational value");
  }
  return ok;
}

bool property_suite() {
  bool ok = true;
  const auto start = std::chrono::steady_clock::now();
  const int n = 200;
  auto rng = make_rng(20240803);
  auto dim_for = [&](int i) { return 2 + (i % 2); };

  for (int i = 0; i < n && ok; ++i) {
    const P f = random_polynomial(rng, dim_for(i), 8);
    const HelmholtzParams<Q> params{random_positive_rational(rng)};
    ok &= expect(residual(params, solve_helmholtz(f, params), f).exact_zero, "helmholtz residual");
  }
  for (int i = 0; i < n && ok; ++i) {
    const int dim = dim_for(i);
    const P f = random_polynomial(rng, dim, 8);
    // random symbol with terms of order 1..2 and no constant part
    Polynomial<Q> sym(dim);
    sym.add_term(random_exponents(rng, dim, 2).with(0, 1), random_rational(rng));
    sym.add_term(MultiIndex::zero(dim).with(dim - 1, 2), random_rational(rng));
    const ZerothOrderParams<Q> params{random_positive_rational(rng), DiffOperator<Q>(sym)};
    ok &= expect(residual(params, solve_zeroth_order(f, params), f).exact_zero,
                 "zeroth-order residual");
  }
  for (int i = 0; i < n && ok; ++i) {
    const int dim = dim_for(i);
    const PolyVector<Q> f = random_poly_vector(rng, dim, dim, 8, 4);
    const ElastodynamicsParams<Q> params{random_positive_rational(rng), random_positive_rational(rng),
                                         Q(1 + static_cast<long long>(rng() % 4), 10),
                                         random_positive_rational(rng)};
    ok &= expect(residual(params, solve_elastodynamics(f, params), f).exact_zero,
                 "elastodynamics residual");
  }
  for (int i = 0; i < n && ok; ++i) {
    std::vector<Polynomial<C>> comps;
    for (int c = 0; c < 3; ++c) comps.push_back(complexify(random_polynomial(rng, 3, 8, 4)));
    const PolyVector<C> current(std::move(comps));
    MaxwellParams<C> params;
    params.eps = C(random_positive_rational(rng));
    params.mu = C(random_positive_rational(rng));
    params.omega = C(random_positive_rational(rng));
    const auto sol = solve_maxwell(current, params);
    const auto rep = residual(params, sol, current);
    ok &= expect(rep.exact_zero, "maxwell residual");
    ok &= expect(rep.constraints[0].second.is_zero(), "maxwell gauge");
  }
  for (int i = 0; i < n && ok; ++i) {
    const P f = random_polynomial(rng, dim_for(i), 8);
    ok &= expect(residual(PoissonPde{}, solve_poisson(f), f).exact_zero, "poisson residual");
  }
  for (int i = 0; i < n && ok; ++i) {
    const P f = random_polynomial(rng, dim_for(i), 8, 5);
    const auto method = i % 2 == 0 ? BilaplaceMethod::iterated : BilaplaceMethod::direct;
    ok &= expect(residual(BilaplacePde{}, solve_bilaplace(f, method), f).exact_zero,
                 "bilaplace residual");
  }
  for (int i = 0; i < n && ok; ++i) {
    const int dim = dim_for(i);
    const PolyVector<Q> f = random_poly_vector(rng, dim, dim, 8, 4);
    const ElastostaticsParams<Q> params{Q(1 + static_cast<long long>(rng() % 4), 10), Q(1)};
    ok &= expect(residual(params, solve_elastostatics(f, params), f).exact_zero,
                 "elastostatics residual");
  }
  for (int i = 0; i < n && ok; ++i) {
    const int dim = dim_for(i);
    const PolyVector<Q> f = random_poly_vector(rng, dim, dim, 8, 4);
    const StokesParams<Q> params{random_positive_rational(rng)};
    const auto sol = solve_stokes(f, params);
    const auto rep = residual(params, sol, f);
    ok &= expect(rep.exact_zero, "stokes residual");
    ok &= expect(rep.constraints[0].second.is_zero(), "stokes incompressibility");
  }
  for (int i = 0; i < n && ok; ++i) {
    const int dim = dim_for(i);
    // random SPD rational matrix: B^T B + I
    std::vector<Q> b;
    for (int j = 0; j < dim * dim; ++j) b.push_back(random_rational(rng, 4, 3));
    std::vector<Q> a(static_cast<size_t>(dim) * dim, Q(0));
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) {
        Q s = r == c ? Q(1) : Q(0);
        for (int k = 0; k < dim; ++k) {
          s += b[static_cast<size_t>(k) * dim + r] * b[static_cast<size_t>(k) * dim + c];
        }
        a[static_cast<size_t>(r) * dim + c] = s;
      }
    }
    const AnisotropyMatrix<Q> mat(dim, std::move(a));
    const P f = random_polynomial(rng, dim, 8, 5);
    ok &= expect(residual(AnisotropicPoissonPde<Q>{mat}, solve_anisotropic_poisson(f, mat), f).exact_zero,
                 "anisotropic residual");
  }
  for (int i = 0; i < n && ok; ++i) {
    const int dim = dim_for(i);
    std::vector<AnisotropyMatrix<Q>> factors;
    for (int j = 0; j < 2; ++j) {
      std::vector<Q> a(static_cast<size_t>(dim) * dim, Q(0));
      for (int k = 0; k < dim; ++k) {
        a[static_cast<size_t>(k) * dim + k] = random_positive_rational(rng, 4, 2);
      }
      factors.emplace_back(dim, std::move(a));
    }
    const P f = random_polynomial(rng, dim, 6, 4);
    ok &= expect(residual(FactorizedAnisotropicPde<Q>{factors},
                          solve_factorized_anisotropic(f, factors), f)
                     .exact_zero,
                 "factorized anisotropic residual");
  }

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok &= expect(seconds < 60.0, "property suite took " + std::to_string(seconds) + " s");
  return ok;
}

bool equivalence_oracles() {
  bool ok = true;
  auto rng = make_rng(424242);
  for (int i = 0; i < 100 && ok; ++i) {
    const int dim = 2 + (i % 2);
    const P f = random_polynomial(rng, dim, 8);
    const Q k = random_positive_rational(rng);
    ok &= expect(solve_zeroth_order(f, ZerothOrderParams<Q>{k * k, DiffOperator<Q>::laplace_symbol(dim)}) ==
                     solve_helmholtz(f, HelmholtzParams<Q>{k}),
                 "zeroth-order vs helmholtz");
    ok &= expect(solve_anisotropic_poisson(f, AnisotropyMatrix<Q>::identity(dim)) == solve_poisson(f),
                 "anisotropic identity vs poisson");
    const auto ident = AnisotropyMatrix<Q>::identity(dim);
    ok &= expect(solve_factorized_anisotropic(f, {ident, ident}) ==
                     solve_bilaplace(f, BilaplaceMethod::iterated),
                 "factorized [I,I] vs iterated bilaplace");
    const P ui = solve_bilaplace(f, BilaplaceMethod::iterated);
    const P ud = solve_bilaplace(f, BilaplaceMethod::direct);
    ok &= expect(residual(BilaplacePde{}, ui, f).exact_zero, "iterated bilaplace residual");
    ok &= expect(residual(BilaplacePde{}, ud, f).exact_zero, "direct bilaplace residual");
  }
  return ok;
}

bool degree_structure() {
  bool ok = true;
  auto rng = make_rng(515151);
  for (int i = 0; i < 100 && ok; ++i) {
    const int dim = 2 + (i % 2);
    const P f = random_polynomial(rng, dim, 8);
    if (f.is_zero()) continue;
    ok &= expect(solve_helmholtz(f, HelmholtzParams<Q>{Q(2)}).total_degree() == f.total_degree(),
                 "helmholtz degree preservation");
    for (const auto& [ndeg, part] : homogeneous_decomposition(f)) {
      int out_deg = 0;
      const P u = solve_poisson_homogeneous(part);
      ok &= expect(is_homogeneous(u, &out_deg) && out_deg == ndeg + 2,
                   "poisson homogeneous output degree");
    }
    const PolyVector<Q> fv = random_poly_vector(rng, dim, dim, 7, 4);
    if (fv.is_zero()) continue;
    const auto sol = solve_stokes(fv, StokesParams<Q>{Q(2)});
    if (!sol.pressure.is_zero()) {
      ok &= expect(sol.pressure.total_degree() <= fv.max_component_degree() + 1,
                   "stokes pressure degree bound");
    }
  }
  return ok;
}

bool mutation_sensitivity() {
  bool ok = true;

  // double mode: one ulp on every coefficient of the golden Helmholtz solve
  const auto fd = Polynomial<double>::monomial(MultiIndex{2, 3, 1}, 1.0);
  const HelmholtzParams<double> dparams{2.0};
  const auto ud = solve_helmholtz(fd, dparams);
  ok &= expect(residual(dparams, ud, fd).exact_zero, "unperturbed double residual not clean");
  for (const auto& [alpha, c] : ud.terms()) {
    auto perturbed = ud;
    perturbed.add_term(alpha, std::nextafter(c, 2 * c) - c);
    const auto rep = residual(dparams, perturbed, fd);
    ok &= expect(!rep.exact_zero && rep.max_coeff_magnitude > 0.0,
                 "one-ulp perturbation not reported (double)");
  }

  // rational mode: 1e-6 on every coefficient of the Helmholtz and Stokes goldens
  const P f = mono({2, 3, 1}, Q(1));
  const HelmholtzParams<Q> qparams{Q(2)};
  const P uq = solve_helmholtz(f, qparams);
  for (const auto& [alpha, c] : uq.terms()) {
    P perturbed = uq;
    perturbed.add_term(alpha, Q(1, 1000000));
    ok &= expect(!residual(qparams, perturbed, f).exact_zero,
                 "1e-6 perturbation not reported (rational helmholtz)");
  }

  const PolyVector<Q> fs({mono({1, 1}, Q(1)), mono({1, 0}, Q(1))});
  const StokesParams<Q> sparams{Q(2)};
  const auto sol = solve_stokes(fs, sparams);
  for (int comp = 0; comp < 2; ++comp) {
    for (const auto& [alpha, c] : sol.velocity[comp].terms()) {
      auto perturbed = sol;
      perturbed.velocity[comp].add_term(alpha, Q(1, 1000000));
      ok &= expect(!residual(sparams, perturbed, fs).passed(),
                   "1e-6 perturbation not reported (stokes velocity)");
    }
  }
  for (const auto& [alpha, c] : sol.pressure.terms()) {
    auto perturbed = sol;
    perturbed.pressure.add_term(alpha, Q(1, 1000000));
    ok &= expect(!residual(sparams, perturbed, fs).passed(),
                 "1e-6 perturbation not reported (stokes pressure)");
  }

  // complex golden: one ulp on the imaginary parts of E
  const PolyVector<ComplexDouble> current(
      {Polynomial<ComplexDouble>::monomial(MultiIndex{2, 1, 0}, ComplexDouble(1.0)),
       Polynomial<ComplexDouble>::monomial(MultiIndex{1, 0, 0}, ComplexDouble(1.0)),
       Polynomial<ComplexDouble>::constant(3, ComplexDouble(1.0))});
  MaxwellParams<ComplexDouble> mparams;
  mparams.mu = ComplexDouble(2.0);
  const auto msol = solve_maxwell(current, mparams);
  ok &= expect(residual(mparams, msol, current).exact_zero, "unperturbed maxwell residual not clean");
  for (int comp = 0; comp < 3; ++comp) {
    for (const auto& [alpha, c] : msol.electric[comp].terms()) {
      auto perturbed = msol;
      const double im = c.imag();
      perturbed.electric[comp].add_term(alpha,
                                        ComplexDouble(0.0, std::nextafter(im, 2 * im) - im));
      const auto rep = residual(mparams, perturbed, current);
      ok &= expect(!rep.exact_zero && rep.max_coeff_magnitude > 0.0,
                   "one-ulp perturbation not reported (maxwell)");
    }
  }
  return ok;
}

}  // namespace

int main() {
  criterion(1, "golden Helmholtz: exact rational map, <=1 ulp double, <1 ms per solve",
            golden_helmholtz);
  criterion(2, "golden Stokes: every printed coefficient exact, div u == 0", golden_stokes);
  criterion(3, "golden Maxwell: exact fields, four field equations + Lorenz gauge identically zero",
            golden_maxwell);
  criterion(4, "interval enclosure of the pi-wavenumber solve within its acceptance boxes",
            interval_enclosure);
  criterion(5, "200 random exact-residual checks per solver family, under 60 s", property_suite);
  criterion(6, "equivalence oracles between solver routes", equivalence_oracles);
  criterion(7, "degree and structure checks", degree_structure);
  criterion(8, "one-ulp / 1e-6 mutations are flagged by the verifier", mutation_sensitivity);
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
