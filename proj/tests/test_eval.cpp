#include <doctest.h>

#include <stdexcept>

#include "gperiods/eval.hpp"
#include "gperiods/gamma.hpp"
#include "gperiods/solve.hpp"

using namespace gp;

namespace {

bool close_rel(const Real& a, const Real& b, long tol_exp) {
  return abs(a / b - 1) < pow10(tol_exp, a.prec());
}

}  // namespace

TEST_CASE("period values through the beta representation") {
  CHECK(close_rel(period_value(Frac(2, 1), 50), const_pi(bits_for_digits(50)), -48));
  CHECK(close_rel(period_value(Frac(1, 1), 50), Real(4L, 64), -48));
  CHECK_THROWS_AS(period_value(Frac(1, 2), 50), std::domain_error);
}

TEST_CASE("beta and quadrature evaluations coincide") {
  for (auto [n, k] : {std::pair<long, long>{3, 2}, {7, 4}, {5, 1}}) {
    Frac s(n, k);
    CAPTURE(n);
    CAPTURE(k);
    Real fast = period_value(s, 50);
    Real quad = period_value(s, 50, true);
    CHECK(close_rel(fast, quad, -45));
  }
}

TEST_CASE("empty product evaluates to one") {
  CHECK(eval_expr(PeriodExpr::one()) == 1);
  CHECK(eval_expr_log(PeriodExpr::one()) == 0);
}

TEST_CASE("expression value matches the gamma power it encodes") {
  ClosedForm cf = solve_closed_form(Frac(1, 5));
  Real direct = eval_expr(cf.expr, {50, false});
  Real g = ref_gamma(Frac(1, 5), 60);
  Real expect = pow(g, cf.exponent);
  CHECK(close_rel(direct, expect, -45));

  Real via_quad = eval_expr(cf.expr, {50, true});
  CHECK(close_rel(via_quad, expect, -40));

  Real lg = eval_expr_log(cf.expr, {50, false});
  CHECK(close_rel(exp(lg), direct, -45));
}

TEST_CASE("gamma atoms cannot be evaluated") {
  PeriodExpr e;
  e.mul_atom(Atom::gamma_at(Frac(1, 3)), Rat(1));
  CHECK_THROWS_AS(eval_expr(e), std::logic_error);
  CHECK_THROWS_AS(eval_expr_log(e), std::logic_error);
}

TEST_CASE("verification accepts true forms and rejects absurd tolerances") {
  ClosedForm cf = solve_closed_form(Frac(1, 7));
  VerifyResult ok = verify_closed_form(cf, 50, 25);
  CHECK(ok.pass);
  CHECK(ok.arg == Frac(1, 7));
  CHECK(ok.exponent == 7);
  CHECK(ok.rel_err.find('e') != std::string::npos);

  // demanding more digits than the working precision holds must fail
  VerifyResult bad = verify_closed_form(solve_closed_form(Frac(1, 5)), 30, 120);
  CHECK(!bad.pass);
}

TEST_CASE("huge exponents verify in log space") {
  // ord(2 mod 37) = 36, so the cycle closes with exponent 2^18 + 1.
  ClosedForm cf = solve_closed_form(Frac(1, 37));
  CHECK(cf.exponent == 262145);
  VerifyResult v = verify_closed_form(cf, 50, 25);
  CHECK(v.pass);
}

TEST_CASE("forced quadrature flows through verification") {
  VerifyResult v = verify_closed_form(solve_closed_form(Frac(1, 3)), 40, 20, true);
  CHECK(v.pass);
}
