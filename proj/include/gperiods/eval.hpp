#pragma once

#include <string>

#include "gperiods/expr.hpp"
#include "gperiods/quadrature.hpp"

namespace gp {

// I_s = (2/s) Beta(1/s, 1/2) via the reference Gamma, or by quadrature
// when forced.  Throws std::runtime_error if the quadrature fails to
// converge.
Real period_value(const Frac& s, long digits, bool force_quadrature = false);

struct EvalOptions {
  long digits = 50;
  bool force_quadrature = false;
};

// Numeric value of an expression.  Gamma atoms are a contract violation.
Real eval_expr(const PeriodExpr& e, const EvalOptions& opt = {});

// Natural log of the value; closed forms with huge exponents overflow
// the direct product long before they overflow in log space.
Real eval_expr_log(const PeriodExpr& e, const EvalOptions& opt = {});

struct VerifyResult {
  Frac arg;
  mpz_class exponent;
  std::string rel_err;  // |expr / Gamma(arg)^E - 1|, scientific
  bool pass = false;
};

// Compares expr against ref_gamma(arg)^E in log space at the given digits.
VerifyResult verify_closed_form(const ClosedForm& cf, long digits, long tol_digits,
                                bool force_quadrature = false);

}  // namespace gp
