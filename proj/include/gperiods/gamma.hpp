#pragma once

#include "gperiods/real.hpp"

namespace gp {

// Smallest Spouge parameter whose error bound a^{-1/2} (2 pi)^{-(a+1/2)}
// stays below 10^{-(digits+2)}.
long spouge_parameter(long digits);

// Gamma(x) for x > 0, correct to about `digits` decimal digits.  The
// coefficient sum loses roughly 2a bits to cancellation, so the working
// precision carries that many guard bits on top of the target.
// `a_param` overrides the Spouge parameter (tests exercise several).
Real ref_gamma(const Real& x, long digits, long a_param = 0);
Real ref_gamma(const Frac& x, long digits, long a_param = 0);

// Beta(a, b) = Gamma(a) Gamma(b) / Gamma(a+b), a, b > 0.
Real ref_beta(const Frac& a, const Frac& b, long digits);
Real ref_beta(const Real& a, const Real& b, long digits);

// sin(pi r) for rational r, reduced mod 2 exactly before rounding.
Real sin_pi(const Frac& r, long digits);

}  // namespace gp
