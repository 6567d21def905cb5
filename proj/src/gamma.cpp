#include "gperiods/gamma.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace gp {

namespace {

// log10 of the Spouge bound for parameter a.
double spouge_log10_bound(long a) {
  return -0.5 * std::log10(static_cast<double>(a)) -
         (static_cast<double>(a) + 0.5) * std::log10(2.0 * 3.14159265358979323846);
}

// c_k = (-1)^{k-1} (a-k)^{k-1/2} e^{a-k} / (k-1)!  for k = 1..a-1.
std::shared_ptr<const std::vector<Real>> spouge_coefficients(long a, Prec prec) {
  static std::mutex mu;
  static std::map<std::pair<long, Prec>, std::shared_ptr<const std::vector<Real>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({a, prec});
    if (it != cache.end()) return it->second;
  }
  auto coeffs = std::make_shared<std::vector<Real>>();
  coeffs->reserve(static_cast<size_t>(a));
  mpz_class fact = 1;
  for (long k = 1; k < a; ++k) {
    if (k > 1) fact *= (k - 1);
    Real base(a - k, prec);
    Real e = Real(2 * k - 1, prec) / 2;
    Real c = pow(base, e) * exp(base) / Real(fact, prec);
    if (k % 2 == 0) c = -c;
    coeffs->push_back(std::move(c));
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(a, prec), std::move(coeffs));
  return it->second;
}

}  // namespace

long spouge_parameter(long digits) {
  if (digits < 1) throw std::domain_error("spouge_parameter: digits must be >= 1");
  long a = 3;
  while (spouge_log10_bound(a) >= -static_cast<double>(digits + 2)) ++a;
  return a;
}

Real ref_gamma(const Real& x, long digits, long a_param) {
  if (digits < 1) throw std::domain_error("ref_gamma: digits must be >= 1");
  if (!x.is_finite() || x.sign() <= 0)
    throw std::domain_error("ref_gamma: argument must be positive and finite");
  const long a = a_param > 0 ? a_param : spouge_parameter(digits);
  const Prec prec = bits_for_digits(digits) + 2 * static_cast<Prec>(a) + 64;

  // Evaluate Gamma(z+1) at z = x or z = x-1 so that z >= 0.
  Real xp(prec);
  mpfr_set(xp.raw(), x.raw(), MPFR_RNDN);
  const bool shift = x < 1;
  Real z = shift ? xp : xp - 1;

  Real two_pi = mul_2exp(const_pi(prec), 1);
  Real sum = sqrt(two_pi);
  auto coeffs = spouge_coefficients(a, prec);
  for (long k = 1; k < a; ++k) sum += (*coeffs)[static_cast<size_t>(k - 1)] / (z + k);

  Real za = z + a;
  Real g = exp((z + Real(Rat(1, 2), prec)) * log(za) - za) * sum;
  // Gamma(x) = Gamma(x+1)/x below 1.
  if (shift) g /= xp;
  return g;
}

Real ref_gamma(const Frac& x, long digits, long a_param) {
  const Prec prec = bits_for_digits(digits) + 64;
  return ref_gamma(Real(x, prec), digits, a_param);
}

Real ref_beta(const Real& a, const Real& b, long digits) {
  if (a.sign() <= 0 || b.sign() <= 0)
    throw std::domain_error("ref_beta: arguments must be positive");
  const long wd = digits + 8;
  return ref_gamma(a, wd) * ref_gamma(b, wd) / ref_gamma(a + b, wd);
}

Real ref_beta(const Frac& a, const Frac& b, long digits) {
  const Prec prec = bits_for_digits(digits + 8) + 64;
  return ref_beta(Real(a, prec), Real(b, prec), digits);
}

Real sin_pi(const Frac& r, long digits) {
  const Prec prec = bits_for_digits(digits) + 64;
  // Reduce the argument mod 2 exactly; sin has period 2 pi.
  mpz_class two_den = 2 * r.den();
  mpz_class red = r.num() % two_den;
  Rat t(red, r.den());
  t.canonicalize();
  return sin(const_pi(prec) * Real(t, prec));
}

}  // namespace gp
