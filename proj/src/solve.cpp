#include "gperiods/solve.hpp"

#include <stdexcept>

namespace gp {

namespace {

mpz_class pow2(long m) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(m));
  return r;
}

// Coefficient for one chain step starting at x = fractions[i], duplication
// fused with the mod-1 reduction when 2x crosses 1.
PeriodExpr step_coefficient(const Frac& x, const Frac& expect_next) {
  auto [c, y] = duplication_step(x);
  if (y > Frac(1, 1)) {
    auto [c2, y2] = recurrence_step(y);
    c = expr_mul(c, c2);
    y = y2;
  }
  if (y != expect_next) throw std::logic_error("solve: chain step mismatch");
  return c;
}

// prod over i in [lo, hi) of coeff_i ^ 2^{hi-1-i}.
PeriodExpr accumulate_steps(const std::vector<Frac>& xs, long lo, long hi) {
  PeriodExpr acc;
  for (long i = lo; i < hi; ++i) {
    PeriodExpr c = step_coefficient(xs[i], xs[i + 1]);
    acc = expr_mul(acc, expr_pow(c, Rat(pow2(hi - 1 - i))));
  }
  return acc;
}

}  // namespace

std::pair<PeriodExpr, Frac> recurrence_step(const Frac& x) {
  if (x <= Frac(1, 1) || x >= Frac(2, 1))
    throw std::domain_error("recurrence_step: argument must lie in (1,2)");
  Frac down = x - Frac(1, 1);
  return {PeriodExpr::from_rational(down.value()), down};
}

std::pair<PeriodExpr, Frac> duplication_step(const Frac& x) {
  if (x.is_zero() || x >= Frac(1, 1))
    throw std::domain_error("duplication_step: argument must lie in (0,1)");
  PeriodExpr c;
  c.mul_rational(Rat(x.reciprocal().value()));
  c.mul_atom(Atom::period(x.reciprocal()), Rat(1));
  c.mul_prime(2, Rat(-2) * x.value());
  return {std::move(c), Frac(x.value() * 2)};
}

PeriodExpr reflection_expr(const Frac& x) {
  if (x.is_zero() || x >= Frac(1, 1) || x == Frac(1, 2))
    throw std::domain_error("reflection_expr: argument must lie in (0,1) and differ from 1/2");
  PeriodExpr out;
  out.mul_atom(Atom::period(Frac(2, 1)), Rat(1));
  Frac r = x > Frac(1, 2) ? Frac(1, 1) - x : x;
  const mpz_class d = r.den();
  // sin(pi/3) = 3^(1/2)/2, sin(pi/4) = 2^(-1/2), sin(pi/6) = 1/2.
  if (d == 3) {
    out.mul_prime(3, Rat(-1, 2));
    out.mul_prime(2, Rat(1));
  } else if (d == 4) {
    out.mul_prime(2, Rat(1, 2));
  } else if (d == 6) {
    out.mul_prime(2, Rat(1));
  } else {
    out.mul_atom(Atom::sinpi(r), Rat(-1));
  }
  return out;
}

ClosedForm solve_closed_form(const mpz_class& p, const mpz_class& q) {
  if (q == 0 || p < 1 || p > q)
    throw std::domain_error("solve_closed_form: need 1 <= p <= q");
  return solve_closed_form(Frac(p, q));
}

ClosedForm solve_closed_form(const Frac& arg) {
  if (arg.is_zero() || arg > Frac(1, 1))
    throw std::domain_error("solve_closed_form: argument must lie in (0,1]");
  if (arg.is_one()) return {arg, 1, PeriodExpr::one()};

  const Chain ch = minimal_chain(arg);
  const auto& xs = ch.fractions;
  const long m = ch.doublings;

  ClosedForm out;
  out.arg = arg;

  switch (ch.closure) {
    case Closure::TerminatesAtOne: {
      // Gamma(x0)^{2^m} = C and Gamma(1) = 1; rescale to exponent 2.
      PeriodExpr c = accumulate_steps(xs, 0, m);
      out.exponent = 2;
      out.expr = expr_pow(c, Rat(2) / Rat(pow2(m)));
      break;
    }
    case Closure::CycleSamePlus:
    case Closure::CycleReflectMinus: {
      const long j = ch.reentry_index;
      if (j == 0) {
        PeriodExpr c = accumulate_steps(xs, 0, m);
        if (ch.closure == Closure::CycleSamePlus) {
          out.exponent = pow2(m) - 1;
          out.expr = std::move(c);
        } else {
          out.exponent = pow2(m) + 1;
          out.expr = expr_mul(c, reflection_expr(arg));
        }
      } else {
        // Even denominator: the pre-period feeds an odd-denominator cycle.
        // Gamma(x0)^{2^j} = pre * Gamma(xj), and Gamma(xj) has its own
        // closed form with exponent E'; substitute its E'-th root.
        PeriodExpr pre = accumulate_steps(xs, 0, j);
        ClosedForm inner = solve_closed_form(xs[j]);
        out.exponent = pow2(j);
        out.expr = expr_mul(pre, expr_pow(inner.expr, Rat(1) / Rat(inner.exponent)));
      }
      break;
    }
  }

  if (out.expr.has_gamma_atoms())
    throw std::logic_error("solve_closed_form: unresolved Gamma atom");
  return out;
}

}  // namespace gp
