#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "polysol/format.hpp"
#include "problem.hpp"
#include "runner.hpp"

using namespace polysol;
using namespace polysol::cli;

namespace {

constexpr const char* kHelmholtzRational =
    R"({"dim":3,"pde":"helmholtz","params":{"k":"2"},"mode":"rational","rhs":[[{"exp":[2,3,1],"coef":"1"}]]})";

}  // namespace

TEST_CASE("parse a valid helmholtz problem") {
  const ProblemFile p = parse_problem(kHelmholtzRational);
  CHECK(p.dim == 3);
  CHECK(p.pde == PdeTag::helmholtz);
  CHECK(p.mode == Mode::rational);
  CHECK(p.params.at("k") == "2");
  REQUIRE(p.rhs.size() == 1);
  REQUIRE(p.rhs[0].size() == 1);
  CHECK(p.rhs[0][0].exponents == std::vector<int>{2, 3, 1});
  CHECK(p.rhs[0][0].coef == "1");
}

TEST_CASE("json round-trip reproduces the problem") {
  for (const char* text : {
           kHelmholtzRational,
           R"({"dim":2,"pde":"stokes","params":{"mu":"2"},"mode":"rational","rhs":[[{"exp":[1,1],"coef":"1"}],[{"exp":[1,0],"coef":"1"}]]})",
           R"({"dim":2,"pde":"anisotropic-poisson","params":{},"mode":"double","rhs":[[{"exp":[0,0],"coef":"1"}]],"matrix":[["2","0"],["0","1"]]})",
           R"({"dim":2,"pde":"zeroth-order","params":{"alpha":"1"},"mode":"rational","rhs":[[{"exp":[2,0],"coef":"1"}]],"operator":[{"exp":[1,0],"coef":"1"}]})",
       }) {
    const ProblemFile p = parse_problem(text);
    const ProblemFile again = parse_problem(problem_to_json(p).dump());
    CHECK(p == again);
  }
}

TEST_CASE("parse failures carry field context") {
  // exponent length mismatch
  CHECK_THROWS_WITH_AS(
      parse_problem(
          R"({"dim":3,"pde":"helmholtz","params":{"k":"2"},"mode":"rational","rhs":[[{"exp":[2,3],"coef":"1"}]]})"),
      "rhs[0][0].exp: length 2 does not match dim 3", ParseError);

  CHECK_THROWS_AS(parse_problem("not json"), ParseError);
  CHECK_THROWS_AS(parse_problem(R"({"dim":2,"pde":"heat","mode":"double","rhs":[[]]})"), ParseError);
  // unknown top-level field
  CHECK_THROWS_AS(
      parse_problem(
          R"({"dim":2,"pde":"poisson","mode":"double","rhs":[[]],"extra":1})"),
      ParseError);
  // unknown parameter name
  CHECK_THROWS_AS(
      parse_problem(
          R"({"dim":2,"pde":"poisson","params":{"k":"1"},"mode":"double","rhs":[[]]})"),
      ParseError);
  // missing required parameter
  CHECK_THROWS_AS(
      parse_problem(R"({"dim":3,"pde":"helmholtz","params":{},"mode":"rational","rhs":[[]]})"),
      ParseError);
  // component count
  CHECK_THROWS_AS(
      parse_problem(R"({"dim":2,"pde":"stokes","params":{"mu":"1"},"mode":"rational","rhs":[[]]})"),
      ParseError);
  // negative exponent
  CHECK_THROWS_AS(
      parse_problem(
          R"({"dim":2,"pde":"poisson","mode":"double","rhs":[[{"exp":[-1,0],"coef":"1"}]]})"),
      ParseError);
  // bad literal for the mode
  CHECK_THROWS_AS(
      parse_problem(
          R"({"dim":2,"pde":"poisson","mode":"rational","rhs":[[{"exp":[1,0],"coef":"2+3i"}]]})"),
      ParseError);
}

TEST_CASE("k = 0 passes parsing but fails at solve") {
  const ProblemFile p = parse_problem(
      R"({"dim":3,"pde":"helmholtz","params":{"k":"0"},"mode":"rational","rhs":[[{"exp":[2,3,1],"coef":"1"}]]})");
  CHECK_THROWS_AS(run_solve(p, RunFlags{}), std::invalid_argument);
}

TEST_CASE("mode override applies before literal validation") {
  // complex literal invalid in the file's rational mode, valid in complex mode
  const char* text =
      R"({"dim":2,"pde":"poisson","mode":"rational","rhs":[[{"exp":[1,0],"coef":"2+3i"}]]})";
  CHECK_THROWS_AS(parse_problem(text), ParseError);
  const ProblemFile p = parse_problem(text, Mode::complex_rational);
  CHECK(p.mode == Mode::complex_rational);
}

TEST_CASE("maxwell literals validate against the promoted ring") {
  // mode says rational, but maxwell runs complex-rational: "2i" must parse
  const char* text =
      R"({"dim":3,"pde":"maxwell","params":{"mu":"2"},"mode":"rational","rhs":[[{"exp":[2,1,0],"coef":"2i"}],[{"exp":[1,0,0],"coef":"1"}],[{"exp":[0,0,0],"coef":"1"}]]})";
  CHECK(parse_problem(text).pde == PdeTag::maxwell);
  CHECK(effective_mode(PdeTag::maxwell, Mode::rational) == Mode::complex_rational);
  CHECK(effective_mode(PdeTag::maxwell, Mode::real_double) == Mode::complex_double);
  CHECK(effective_mode(PdeTag::poisson, Mode::rational) == Mode::rational);
}

TEST_CASE("coefficient literal grammar") {
  CHECK(parse_coefficient<Rational>("3/8") == Rational(3, 8));
  CHECK(parse_coefficient<Rational>("-3/8") == Rational(-3, 8));
  CHECK(parse_coefficient<Rational>("0.375") == Rational(3, 8));
  CHECK(parse_coefficient<Rational>("1.5e-3") == Rational(3, 2000));
  CHECK(parse_coefficient<double>("0.375") == 0.375);
  CHECK(parse_coefficient<double>("1e2") == 100.0);

  const auto z = parse_coefficient<ComplexRational>("2+3i");
  CHECK(z == ComplexRational(Rational(2), Rational(3)));
  CHECK(parse_coefficient<ComplexRational>("-i") == ComplexRational(Rational(0), Rational(-1)));
  CHECK(parse_coefficient<ComplexRational>("1/4i") == ComplexRational(Rational(0), Rational(1, 4)));
  CHECK(parse_coefficient<ComplexRational>("3/8-1/4i") ==
        ComplexRational(Rational(3, 8), Rational(-1, 4)));
  CHECK(parse_coefficient<ComplexDouble>("2e+3i") == ComplexDouble(0.0, 2000.0));

  const Interval iv = parse_coefficient<Interval>("[0.1,0.2]");
  CHECK(iv.lo() <= 0.1);
  CHECK(iv.hi() >= 0.2);
  CHECK(parse_coefficient<Interval>("0.375") == Interval(0.375));

  CHECK_THROWS_AS(parse_coefficient<Rational>("1/0"), ParseError);
  CHECK_THROWS_AS(parse_coefficient<Rational>("x"), ParseError);
  CHECK_THROWS_AS(parse_coefficient<double>(""), ParseError);
  CHECK_THROWS_AS(parse_coefficient<Interval>("[0.2,0.1]"), ParseError);
  CHECK_THROWS_AS(parse_coefficient<double>("[0.1,0.2]"), ParseError);
}

TEST_CASE("pi expands per mode") {
  CHECK(parse_coefficient<double>("pi") == M_PI);
  const Interval pi_enc = parse_coefficient<Interval>("pi");
  CHECK(pi_enc.lo() == M_PI);
  CHECK(pi_enc.width() <= std::ldexp(1.0, -50));
  const Rational pi_q = parse_coefficient<Rational>("pi");
  // accurate to 1e-30: |pi_hat - pi| < 1e-30 << |pi - M_PI| ~ 1.2e-16
  CHECK(pi_q > Rational::from_double_exact(M_PI));
  CHECK(pi_q < Rational::from_double_exact(rounding::next_up(M_PI)));
  const auto pi_c = parse_coefficient<ComplexRational>("pi");
  CHECK(pi_c.real() == pi_q);
  CHECK(pi_c.imag() == Rational(0));
}

TEST_CASE("text rendering styles") {
  using PD = Polynomial<double>;
  PD u(3);
  u.add_term(MultiIndex{0, 1, 1}, 0.375);
  u.add_term(MultiIndex{0, 3, 1}, -0.125);
  u.add_term(MultiIndex{2, 1, 1}, -0.375);
  u.add_term(MultiIndex{2, 3, 1}, 0.25);
  CHECK(to_string(u) == "0.375*y*z - 0.125*y^3*z - 0.375*x^2*y*z + 0.25*x^2*y^3*z");
  CHECK(to_string(u, TermStyle::unicode) ==
        "0.375yz - 0.125y³z - 0.375x²yz + 0.25x²y³z");

  CHECK(to_string(Polynomial<double>(2)) == "0");
  CHECK(to_string(PD::monomial(MultiIndex{1, 0, 0}, 1.0)) == "x");
  CHECK(to_string(PD::monomial(MultiIndex{1, 0, 0}, -1.0)) == "-x");

  using PC = Polynomial<ComplexRational>;
  PC e1(3);
  e1.add_term(MultiIndex{2, 1, 0}, ComplexRational(Rational(0), Rational(-1)));
  CHECK(to_string(e1) == "(-1i)*x^2*y");

  Polynomial<Rational> rq(2);
  rq.add_term(MultiIndex{0, 3}, Rational(-1, 96));
  rq.add_term(MultiIndex{2, 1}, Rational(-1, 32));
  CHECK(to_string(rq) == "-1/96*y^3 - 1/32*x^2*y");

  // four variables switch to indexed names
  Polynomial<Rational> four(4);
  four.add_term(MultiIndex{1, 0, 0, 2}, Rational(3));
  CHECK(to_string(four) == "3*x1*x4^2");
}

TEST_CASE("every pde family dispatches and verifies through the runner") {
  const std::vector<const char*> problems = {
      R"({"dim":2,"pde":"helmholtz","params":{"k":"3/2"},"mode":"rational","rhs":[[{"exp":[2,1],"coef":"1"},{"exp":[0,0],"coef":"-2"}]]})",
      R"({"dim":2,"pde":"zeroth-order","params":{"alpha":"2"},"mode":"rational","rhs":[[{"exp":[3,0],"coef":"1"}]],"operator":[{"exp":[1,1],"coef":"1"},{"exp":[0,2],"coef":"3"}]})",
      R"({"dim":2,"pde":"elastodynamics","params":{"rho":"1","mu":"2","nu":"1/4","omega":"1"},"mode":"rational","rhs":[[{"exp":[1,1],"coef":"1"}],[{"exp":[2,0],"coef":"1"}]]})",
      R"({"dim":3,"pde":"maxwell","params":{"mu":"2"},"mode":"complex-rational","rhs":[[{"exp":[2,1,0],"coef":"1"}],[{"exp":[1,0,0],"coef":"1"}],[{"exp":[0,0,0],"coef":"1"}]]})",
      R"({"dim":3,"pde":"maxwell","params":{},"mode":"double","rhs":[[{"exp":[2,1,0],"coef":"1"}],[{"exp":[1,0,0],"coef":"1"}],[{"exp":[0,0,0],"coef":"1"}]]})",
      R"({"dim":3,"pde":"poisson","mode":"rational","rhs":[[{"exp":[2,3,1],"coef":"5/7"}]]})",
      R"({"dim":2,"pde":"bilaplace","params":{"method":"direct"},"mode":"rational","rhs":[[{"exp":[4,0],"coef":"1"}]]})",
      R"({"dim":2,"pde":"bilaplace","params":{"method":"iterated"},"mode":"interval","rhs":[[{"exp":[4,0],"coef":"0.1"}]]})",
      R"({"dim":2,"pde":"elastostatics","params":{"nu":"1/3"},"mode":"rational","rhs":[[{"exp":[1,0],"coef":"1"}],[{"exp":[0,1],"coef":"2"}]]})",
      R"({"dim":3,"pde":"stokes","params":{"mu":"3/2"},"mode":"rational","rhs":[[{"exp":[1,1,0],"coef":"1"}],[{"exp":[0,0,2],"coef":"1"}],[{"exp":[1,0,0],"coef":"1"}]]})",
      R"({"dim":2,"pde":"anisotropic-poisson","mode":"rational","rhs":[[{"exp":[2,1],"coef":"1"}]],"matrix":[["3","1"],["1","2"]]})",
      R"({"dim":3,"pde":"factorized-anisotropic","mode":"rational","rhs":[[{"exp":[2,0,0],"coef":"1"}]],"factors":[[["2","0","0"],["0","2","0"],["0","0","1"]],[["3","0","0"],["0","3","0"],["0","0","1"]]]})",
      R"({"dim":2,"pde":"helmholtz","params":{"k":"2"},"mode":"double","rhs":[[{"exp":[3,2],"coef":"0.5"}]]})",
      R"({"dim":2,"pde":"helmholtz","params":{"k":"pi"},"mode":"interval","rhs":[[{"exp":[3,2],"coef":"1"}]]})",
      R"({"dim":2,"pde":"helmholtz","params":{"k":"1+1i"},"mode":"complex","rhs":[[{"exp":[2,0],"coef":"1"}]]})",
  };
  RunFlags flags;
  flags.verify = true;
  for (const char* text : problems) {
    CAPTURE(text);
    const RunOutcome outcome = run_solve(parse_problem(text), flags);
    CHECK(outcome.exit_code == 0);
    CHECK_FALSE(outcome.output.empty());
  }
}

TEST_CASE("unsupported mode and pde combinations fail at solve time") {
  // no complex-interval ring for maxwell
  const ProblemFile maxwell_interval = parse_problem(
      R"({"dim":3,"pde":"maxwell","params":{},"mode":"interval","rhs":[[{"exp":[0,0,0],"coef":"1"}],[{"exp":[0,0,0],"coef":"0"}],[{"exp":[0,0,0],"coef":"0"}]]})");
  CHECK_THROWS_AS(run_solve(maxwell_interval, RunFlags{}), std::invalid_argument);

  // stokes needs ordered scalars
  const ProblemFile stokes_complex = parse_problem(
      R"({"dim":2,"pde":"stokes","params":{"mu":"2"},"mode":"complex","rhs":[[{"exp":[1,1],"coef":"1"}],[{"exp":[1,0],"coef":"1"}]]})");
  CHECK_THROWS_AS(run_solve(stokes_complex, RunFlags{}), std::invalid_argument);
}

TEST_CASE("determinism of solve output") {
  const ProblemFile p = parse_problem(kHelmholtzRational);
  RunFlags flags;
  flags.json_output = true;
  flags.verify = true;
  const RunOutcome a = run_solve(p, flags);
  const RunOutcome b = run_solve(p, flags);
  CHECK(a.output == b.output);
  CHECK(a.exit_code == 0);
}
