#pragma once

#include <utility>

#include "gperiods/chain.hpp"
#include "gperiods/expr.hpp"

namespace gp {

// Gamma(x) = (x-1) Gamma(x-1) for 1 < x < 2, returned as
// (coefficient, new argument).
std::pair<PeriodExpr, Frac> recurrence_step(const Frac& x);

// Gamma(x)^2 = (1/x) I_{1/x} 2^{-2x} Gamma(2x) for 0 < x < 1, returned as
// (coefficient, 2x).  The new argument may exceed 1.
std::pair<PeriodExpr, Frac> duplication_step(const Frac& x);

// Gamma(x) Gamma(1-x) = I_2 / sin(pi x) for 0 < x < 1, x != 1/2.
// Sines with denominator in {1,2,3,4,6} are folded into prime powers.
PeriodExpr reflection_expr(const Frac& x);

// Closed form for Gamma(p/q)^E as a product of periods, prime powers and
// sines, obtained by composing the minimal chain's steps.  E depends on
// the closure: 2^m - 1 / 2^m + 1 for cycles, 2 for chains ending at 1,
// 2^j when an even denominator re-enters the cycle at index j.
ClosedForm solve_closed_form(const Frac& arg);
ClosedForm solve_closed_form(const mpz_class& p, const mpz_class& q);

}  // namespace gp
