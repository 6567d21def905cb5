#include "gperiods/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gp {

Prec bits_for_digits(long digits) {
  if (digits < 1) throw std::domain_error("bits_for_digits: digits must be >= 1");
  return static_cast<Prec>(digits * 3.321928094887362) + 64;
}

Real::Real(Prec prec) { mpfr_init2(v_, prec); }

Real::Real(long v, Prec prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(double v, Prec prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const mpz_class& v, Prec prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rat& v, Prec prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Frac& v, Prec prec) : Real(v.value(), prec) {}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, 2);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::str(long digits) const {
  if (digits < 1) digits = 1;
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(v_)) return "0e0";
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string digits_str(s);
  mpfr_free_str(s);
  std::string sign;
  if (digits_str.front() == '-') {
    sign = "-";
    digits_str.erase(0, 1);
  }
  std::string out = sign + digits_str.substr(0, 1);
  if (digits_str.size() > 1) out += "." + digits_str.substr(1);
  out += "e" + std::to_string(static_cast<long>(e) - 1);
  return out;
}

namespace {
Prec join(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }
}  // namespace

Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.raw(), v_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
Real& Real::operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }

Real operator+(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_add(r.raw(), a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_sub(r.raw(), a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_mul(r.raw(), a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_div(r.raw(), a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator+(const Real& a, long b) {
  Real r(a.prec());
  mpfr_add_si(r.raw(), a.v_, b, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, long b) {
  Real r(a.prec());
  mpfr_sub_si(r.raw(), a.v_, b, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r(a.prec());
  mpfr_mul_si(r.raw(), a.v_, b, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, long b) {
  Real r(a.prec());
  mpfr_div_si(r.raw(), a.v_, b, MPFR_RNDN);
  return r;
}
Real operator-(long a, const Real& b) {
  Real r(b.prec());
  mpfr_si_sub(r.raw(), a, b.v_, MPFR_RNDN);
  return r;
}
Real operator/(long a, const Real& b) {
  Real r(b.prec());
  mpfr_si_div(r.raw(), a, b.v_, MPFR_RNDN);
  return r;
}

#define GP_UNARY(name, fn)                \
  Real name(const Real& x) {              \
    Real r(x.prec());                     \
    fn(r.raw(), x.raw(), MPFR_RNDN);      \
    return r;                             \
  }

GP_UNARY(abs, mpfr_abs)
GP_UNARY(sqrt, mpfr_sqrt)
GP_UNARY(exp, mpfr_exp)
GP_UNARY(expm1, mpfr_expm1)
GP_UNARY(log, mpfr_log)
GP_UNARY(log1p, mpfr_log1p)
GP_UNARY(sin, mpfr_sin)
GP_UNARY(cos, mpfr_cos)
GP_UNARY(sinh, mpfr_sinh)
GP_UNARY(cosh, mpfr_cosh)
#undef GP_UNARY

Real atan2(const Real& y, const Real& x) {
  Real r(join(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r(join(x, y));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, const Real& e) {
  Real r(join(base, e));
  mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, long e) {
  Real r(base.prec());
  mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
  return r;
}

Real pow(const Real& base, const mpz_class& e) {
  Real r(base.prec());
  mpfr_pow_z(r.raw(), base.raw(), e.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real mul_2exp(const Real& x, long e) {
  Real r(x.prec());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

Real const_pi(Prec prec) {
  Real r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

Real pow10(long e, Prec prec) {
  Real r(prec);
  mpfr_set_si(r.raw(), 10, MPFR_RNDN);
  mpfr_pow_si(r.raw(), r.raw(), e, MPFR_RNDN);
  return r;
}

CReal operator/(const CReal& a, const CReal& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Real cabs(const CReal& z) { return hypot(z.re, z.im); }
Real carg(const CReal& z) { return atan2(z.im, z.re); }
CReal conj(const CReal& z) { return {z.re, -z.im}; }

CReal csqrt(const CReal& z) {
  // a = sqrt((|z| + |re|)/2) is the large component; the small one comes
  // from im/(2a), which avoids cancellation for re < 0.
  Prec p = join(z.re, z.im);
  if (z.im.sign() == 0) {
    if (z.re.sign() >= 0) return {sqrt(z.re), Real(0L, p)};
    return {Real(0L, p), sqrt(-z.re)};
  }
  Real r = cabs(z);
  Real a = sqrt(mul_2exp(r + abs(z.re), -1));
  Real small = z.im / mul_2exp(a, 1);
  if (z.re.sign() >= 0) return {a, small};
  Real sb = z.im.sign() >= 0 ? a : -a;
  return {abs(small), sb};
}

CReal clog1p(const CReal& u) {
  // log|1+u| = log1p(2 re + |u|^2)/2, valid for |u| < 1.
  Real t = u.re * 2 + (u.re * u.re + u.im * u.im);
  return {mul_2exp(log1p(t), -1), atan2(u.im, u.re + 1)};
}

CReal cexpm1(const CReal& w) {
  // re(e^w - 1) = expm1(re) cos(im) - 2 sin^2(im/2), exact in the limit w -> 0.
  Real s = sin(mul_2exp(w.im, -1));
  Real re = expm1(w.re) * cos(w.im) - mul_2exp(s * s, 1);
  Real im = exp(w.re) * sin(w.im);
  return {re, im};
}

CReal cpow(const CReal& z, long n) {
  if (n < 0) throw std::domain_error("cpow: negative exponent");
  Prec p = join(z.re, z.im);
  CReal r(Real(1L, p), Real(0L, p));
  CReal b = z;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

}  // namespace gp
