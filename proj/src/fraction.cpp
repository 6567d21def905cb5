#include "gperiods/fraction.hpp"

#include <cctype>
#include <stdexcept>

namespace gp {

void Frac::check() const {
  if (sgn(v_) < 0) throw std::domain_error("Frac: negative value");
}

Frac::Frac(long num, long den) {
  if (den == 0) throw std::domain_error("Frac: zero denominator");
  v_ = Rat(num, den);
  v_.canonicalize();
  check();
}

Frac::Frac(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Frac: zero denominator");
  v_ = Rat(num, den);
  v_.canonicalize();
  check();
}

Frac::Frac(const Rat& v) : v_(v) {
  v_.canonicalize();
  check();
}

long Frac::num_long() const {
  mpz_class n = num();
  if (!n.fits_slong_p()) throw std::overflow_error("Frac: numerator does not fit in long");
  return n.get_si();
}

long Frac::den_long() const {
  mpz_class d = den();
  if (!d.fits_slong_p()) throw std::overflow_error("Frac: denominator does not fit in long");
  return d.get_si();
}

Frac Frac::reciprocal() const {
  if (is_zero()) throw std::domain_error("Frac: reciprocal of zero");
  return Frac(Rat(1 / v_));
}

Frac operator-(const Frac& a, const Frac& b) {
  if (b.v_ > a.v_) throw std::domain_error("Frac: negative difference");
  return Frac(Rat(a.v_ - b.v_));
}

std::optional<Frac> Frac::parse(std::string_view text) {
  size_t i = 0, n = text.size();
  auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto read_digits = [&]() -> std::optional<std::string> {
    std::string out;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) out += text[i++];
    if (out.empty()) return std::nullopt;
    return out;
  };

  skip_ws();
  auto ip = read_digits();
  if (!ip) return std::nullopt;

  if (i < n && text[i] == '.') {
    ++i;
    auto fp = read_digits();
    if (!fp) return std::nullopt;
    skip_ws();
    if (i != n) return std::nullopt;
    // base 10 always; the default base 0 would read a leading zero as octal
    mpz_class num(*ip + *fp, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp->size());
    return Frac(num, den);
  }

  skip_ws();
  if (i < n && text[i] == '/') {
    ++i;
    skip_ws();
    auto dp = read_digits();
    if (!dp) return std::nullopt;
    skip_ws();
    if (i != n) return std::nullopt;
    mpz_class den(*dp, 10);
    if (den == 0) return std::nullopt;
    return Frac(mpz_class(*ip, 10), den);
  }

  if (i != n) return std::nullopt;
  return Frac(mpz_class(*ip, 10), mpz_class(1));
}

std::map<long long, long> factor_integer(mpz_class n) {
  if (n < 1) throw std::domain_error("factor_integer: argument must be >= 1");
  std::map<long long, long> out;
  auto strip = [&](long p) {
    long e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
      ++e;
    }
    if (e > 0) out[p] = e;
  };
  strip(2);
  for (long d = 3; d <= 10000000 && n > 1; d += 2) {
    if (mpz_class(d) * d > n) break;
    strip(d);
  }
  if (n > 1) {
    // All divisors up to 1e7 are gone, so any remainder below 1e14 is prime.
    if (n >= mpz_class("100000000000000"))
      throw std::domain_error("factor_integer: prime factor too large");
    out[mpz_get_si(n.get_mpz_t())] += 1;
  }
  return out;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(mpz_class(static_cast<long>(n)).get_mpz_t(), 30) > 0;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace gp
