#pragma once

#include <mpfr.h>

#include <string>

#include "gperiods/fraction.hpp"

namespace gp {

using Prec = mpfr_prec_t;

// Working precision in bits for a decimal digit count, with guard bits.
Prec bits_for_digits(long digits);

// Arbitrary-precision float with per-object precision.  No global MPFR
// state is touched; every value carries its own precision and binary
// operations round to the wider of the two operands.
class Real {
public:
  explicit Real(Prec prec);  // NaN
  Real(long v, Prec prec);
  Real(double v, Prec prec);
  Real(const mpz_class& v, Prec prec);
  Real(const Rat& v, Prec prec);
  Real(const Frac& v, Prec prec);

  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  Prec prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Scientific notation with the requested significant digits,
  // round-half-even: "1.2345e-7", "-3.0e0", "0e0".
  std::string str(long digits) const;

  Real operator-() const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator-(long a, const Real& b);
  friend Real operator/(long a, const Real& b);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& base, const Real& e);
Real pow(const Real& base, long e);
Real pow(const Real& base, const mpz_class& e);
Real mul_2exp(const Real& x, long e);  // x * 2^e, exact
Real const_pi(Prec prec);
// 10^e at the given precision; e may be negative.
Real pow10(long e, Prec prec);

// Complex value over Real; both parts share a precision.
struct CReal {
  Real re, im;

  CReal(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit CReal(Prec prec) : re(0L, prec), im(0L, prec) {}

  friend CReal operator+(const CReal& a, const CReal& b) { return {a.re + b.re, a.im + b.im}; }
  friend CReal operator-(const CReal& a, const CReal& b) { return {a.re - b.re, a.im - b.im}; }
  friend CReal operator*(const CReal& a, const CReal& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CReal operator*(const CReal& a, const Real& s) { return {a.re * s, a.im * s}; }
  friend CReal operator/(const CReal& a, const CReal& b);
  CReal operator-() const { return {-re, -im}; }
};

Real cabs(const CReal& z);
Real carg(const CReal& z);
CReal conj(const CReal& z);
CReal csqrt(const CReal& z);   // principal branch
CReal clog1p(const CReal& u);  // log(1+u), |u| < 1
CReal cexpm1(const CReal& w);
CReal cpow(const CReal& z, long n);  // integer n >= 0

}  // namespace gp
