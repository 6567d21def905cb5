#include "gperiods/eval.hpp"

#include <stdexcept>

#include "gperiods/gamma.hpp"

namespace gp {

Real period_value(const Frac& s, long digits, bool force_quadrature) {
  if (s < Frac(1, 1)) throw std::domain_error("period_value: index must be >= 1");
  if (force_quadrature) {
    QuadResult r = period_quad(s, digits);
    if (!r.converged) throw std::runtime_error("period_value: quadrature did not converge");
    return r.value;
  }
  return Real(Rat(2) / s.value(), bits_for_digits(digits) + 64) *
         ref_beta(s.reciprocal(), Frac(1, 2), digits);
}

namespace {

Real atom_value(const Atom& a, long digits, bool force_quadrature) {
  switch (a.kind) {
    case Atom::Kind::PeriodI:
      return period_value(a.arg, digits, force_quadrature);
    case Atom::Kind::SinPi:
      return sin_pi(a.arg, digits);
    case Atom::Kind::Gamma:
      throw std::logic_error("eval_expr: unresolved Gamma atom");
  }
  throw std::logic_error("eval_expr: bad atom kind");
}

}  // namespace

Real eval_expr(const PeriodExpr& e, const EvalOptions& opt) {
  const long wd = opt.digits + 25;
  const Prec prec = bits_for_digits(wd);
  Real acc(1L, prec);
  for (auto& [p, pe] : e.primes()) acc *= pow(Real(static_cast<long>(p), prec), Real(pe, prec));
  for (auto& [a, ae] : e.atoms())
    acc *= pow(atom_value(a, wd, opt.force_quadrature), Real(ae, prec));
  return acc;
}

Real eval_expr_log(const PeriodExpr& e, const EvalOptions& opt) {
  const long wd = opt.digits + 25;
  const Prec prec = bits_for_digits(wd);
  Real acc(0L, prec);
  for (auto& [p, pe] : e.primes()) acc += Real(pe, prec) * log(Real(static_cast<long>(p), prec));
  for (auto& [a, ae] : e.atoms())
    acc += Real(ae, prec) * log(atom_value(a, wd, opt.force_quadrature));
  return acc;
}

VerifyResult verify_closed_form(const ClosedForm& cf, long digits, long tol_digits,
                                bool force_quadrature) {
  Real lhs = eval_expr_log(cf.expr, {digits, force_quadrature});
  Real gl = log(ref_gamma(cf.arg, digits + 10));
  Real rhs = Real(cf.exponent, gl.prec()) * gl;
  Real rel = abs(expm1(lhs - rhs));
  bool pass = rel < pow10(-tol_digits, rel.prec());
  return {cf.arg, cf.exponent, rel.str(3), pass};
}

}  // namespace gp
