#include "gperiods/quadrature.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

namespace gp {

namespace {

constexpr int kMaxLevel = 12;

// One tanh-sinh node t > 0 mapped to (0,1): x = 1/(1 + e^{-2w}) with
// w = (pi/2) sinh t.  Both x and 1-x are produced at full accuracy so
// integrands can resolve the endpoint they are singular at.
struct Node {
  Real x, one_minus_x, weight;  // weight = pi cosh(t) x (1-x)
};

Node make_node(const Real& t, const Real& pi_half) {
  Real w = pi_half * sinh(t);
  Real ew = exp(mul_2exp(-w, 1));  // e^{-2w} <= 1
  Real x = 1L / (ew + 1);
  Real omx = ew * x;
  Real weight = mul_2exp(pi_half, 1) * cosh(t) * x * omx;
  return {std::move(x), std::move(omx), std::move(weight)};
}

template <class V>
struct Sum;

template <>
struct Sum<Real> {
  static Real zero(Prec p) { return Real(0L, p); }
  static Real absval(const Real& v) { return abs(v); }
};

template <>
struct Sum<CReal> {
  static CReal zero(Prec p) { return CReal(p); }
  static Real absval(const CReal& v) { return cabs(v); }
};

// f(x, 1-x) integrated over (0,1).  Levels halve the step until two
// consecutive estimates agree to `target`; the published error estimate
// is the last level-to-level difference.
template <class V>
struct TanhSinhResult {
  V value;
  Real err;
  long evaluations;
  bool converged;
  int levels;
};

template <class V, class F>
TanhSinhResult<V> tanh_sinh_01(const F& f, Prec prec, const Real& target, long tail_digits) {
  const Real pi_half = mul_2exp(const_pi(prec), -1);
  const Real tail_eps = pow10(-tail_digits, prec);

  // Nodes past t_max contribute below the tail threshold:
  // 1 - x(t) ~ exp(-pi sinh(t)), so sinh(t_max) = tail_digits ln10 / pi.
  const double t_max =
      std::asinh(static_cast<double>(tail_digits) * 2.302585092994046 / 3.141592653589793) + 0.5;

  V sum = Sum<V>::zero(prec);
  long evals = 0;
  V estimate = Sum<V>::zero(prec);
  Real err(prec);
  bool have_prev = false;
  bool converged = false;
  int level = 0;

  for (; level <= kMaxLevel; ++level) {
    const long kmax = static_cast<long>(std::ceil(t_max * std::ldexp(1.0, level))) + 1;
    int below_tail = 0;
    for (long k = (level == 0) ? 0 : 1; k <= kmax; k += (level == 0) ? 1 : 2) {
      Real t = mul_2exp(Real(k, prec), -level);
      Node nd = make_node(t, pi_half);
      V term = f(nd.x, nd.one_minus_x) * nd.weight;
      ++evals;
      if (k > 0) {
        term = term + f(nd.one_minus_x, nd.x) * nd.weight;
        ++evals;
      }
      sum = sum + term;
      if (Sum<V>::absval(term) < tail_eps) {
        if (++below_tail >= 2) break;
      } else {
        below_tail = 0;
      }
    }
    V current = sum;
    if constexpr (std::is_same_v<V, Real>) {
      current = mul_2exp(current, -level);
    } else {
      current = {mul_2exp(current.re, -level), mul_2exp(current.im, -level)};
    }
    if (have_prev) {
      err = Sum<V>::absval(current - estimate);
      estimate = current;
      if (level >= 2 && err <= target) {
        converged = true;
        ++level;
        break;
      }
    } else {
      estimate = current;
      have_prev = true;
    }
  }
  return {std::move(estimate), std::move(err), evals, converged, level};
}

void check_digits(long digits) {
  if (digits < 1) throw std::domain_error("quadrature: digits must be >= 1");
}

}  // namespace

QuadResult period_quad(const Frac& s, long digits) {
  check_digits(digits);
  if (s < Frac(1, 1)) throw std::domain_error("period_quad: index must be >= 1");
  const Prec prec = bits_for_digits(digits + 20);
  const Real sv(s, prec);
  const Real half(Rat(1, 2), prec);
  auto f = [&](const Real& x, const Real& omx) -> Real {
    // 1 - x^s = -expm1(s log x); log x from 1-x near the right endpoint.
    Real lx = x <= half ? log(x) : log1p(-omx);
    return 1L / sqrt(-expm1(sv * lx));
  };
  const Real target = pow10(-(digits - 10), prec);
  auto r = tanh_sinh_01<Real>(f, prec, target, digits + 20);
  return {mul_2exp(r.value, 1), mul_2exp(r.err, 1), r.evaluations, r.converged, r.levels};
}

QuadResult period_quad_nk(long n, long k, long digits) {
  check_digits(digits);
  if (n < 1 || k < 1 || k > n) throw std::domain_error("period_quad_nk: need n >= 1, 1 <= k <= n");
  const Prec prec = bits_for_digits(digits + 20);
  const Real nv(n, prec);
  const Real half(Rat(1, 2), prec);
  auto f = [&](const Real& x, const Real& omx) -> Real {
    Real lx = x <= half ? log(x) : log1p(-omx);
    Real xk = k == 1 ? Real(1L, prec) : exp(lx * (k - 1));
    return xk / sqrt(-expm1(nv * lx));
  };
  const Real target = pow10(-(digits - 10), prec);
  auto r = tanh_sinh_01<Real>(f, prec, target, digits + 20);
  return {r.value * (2 * k), r.err * (2 * k), r.evaluations, r.converged, r.levels};
}

CQuadResult branch_chord_integral(long n, long digits) {
  check_digits(digits);
  if (n < 2) throw std::domain_error("branch_chord_integral: need n >= 2");
  const Prec prec = bits_for_digits(digits + 20);

  const Real pi = const_pi(prec);
  const Real ang = mul_2exp(pi, 1) / n;
  const CReal zeta{cos(ang), sin(ang)};
  const CReal delta{zeta.re - 1, zeta.im};
  const Real half(Rat(1, 2), prec);
  const Real abs_delta = cabs(delta);

  // x(t) = 1 + t delta walks the chord; 1 - x^n needs log1p treatment at
  // both endpoints, where x^n approaches 1.
  auto one_minus_xn = [&](const Real& t, const Real& omt) -> CReal {
    if (t <= half && t * abs_delta < half) {
      CReal u{t * delta.re, t * delta.im};
      CReal w = clog1p(u);
      return -cexpm1({w.re * n, w.im * n});
    }
    if (omt <= half && omt * abs_delta < half) {
      // x = zeta (1 + u) with u = -(1-t) delta / zeta, and zeta^n = 1.
      CReal u = CReal{-(omt * delta.re), -(omt * delta.im)} / zeta;
      CReal w = clog1p(u);
      return -cexpm1({w.re * n, w.im * n});
    }
    CReal x{t * delta.re + 1, t * delta.im};
    CReal xn = cpow(x, n);
    return {1L - xn.re, -xn.im};
  };

  auto f = [&](const Real& t, const Real& omt) -> CReal {
    return delta / csqrt(one_minus_xn(t, omt));
  };

  const Real target = pow10(-(digits - 10), prec);
  auto r = tanh_sinh_01<CReal>(f, prec, target, digits + 20);
  return {std::move(r.value), std::move(r.err), r.evaluations, r.converged, r.levels};
}

SymmetryReport branch_symmetry_ratio(long n, long digits) {
  CQuadResult chord = branch_chord_integral(n, digits);
  QuadResult in = period_quad(Frac(n, 1), digits);
  const Prec prec = chord.value.re.prec();

  const Real pi = const_pi(prec);
  const Real ang = mul_2exp(pi, 1) / n;
  const CReal one_minus_zeta{1L - cos(ang), -sin(ang)};
  CReal expected = one_minus_zeta * mul_2exp(in.value, -1);
  CReal ratio = chord.value / expected;

  SymmetryReport rep{std::move(chord), std::move(expected), ratio, cabs(ratio), carg(ratio), false};
  rep.converged = rep.chord.converged && in.converged;
  return rep;
}

}  // namespace gp
